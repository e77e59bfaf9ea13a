#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperrho/cli.hpp"
#include "hyperrho/families.hpp"
#include "hyperrho/hypergraph.hpp"

using namespace hyperrho;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, SpectralStar) {
  const auto path = write_temp("star.uhg", serialize_uhg(families::hyperstar(4, 3)));
  const auto r = run({"spectral", "--alpha", "0", "--format", "json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  for (const char* key : {"command", "inputs", "alpha", "results", "version"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["command"], "spectral");
  EXPECT_NEAR(j["results"][0]["rho"].get<double>(), 1.587401, 1e-6);
  EXPECT_EQ(j["inputs"]["tol"].get<double>(), 1e-12);
}

TEST(Cli, TwoAlphaRecords) {
  const auto path = write_temp("path3.uhg", serialize_uhg(families::loose_path(3, 3)));
  const auto r = run({"spectral", "--alpha", "0,0.5", "--format", "json", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["results"].size(), 2u);
}

TEST(Cli, HumanAndJsonCarryTheSameNumbers) {
  const auto path = write_temp("broom.uhg", serialize_uhg(families::broom_S(5, 3, 3)));
  const auto human = run({"spectral", "--alpha", "0.5", path});
  const auto json = run({"spectral", "--alpha", "0.5", "--format", "json", path});
  ASSERT_EQ(human.code, 0);
  const double rho = Json::parse(json.out)["results"][0]["rho"].get<double>();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", rho);
  EXPECT_NE(human.out.find(std::string("rho: ") + buf), std::string::npos) << human.out;
}

TEST(Cli, DisconnectedInputIsDecomposed) {
  const auto path = write_temp("split.uhg", "2 5 3\n0 1\n1 2\n3 4\n");
  const auto r = run({"spectral", "--format", "json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto item = Json::parse(r.out)["results"][0];
  EXPECT_EQ(item["components"].size(), 2u);
  EXPECT_EQ(item["max_component"], 0);
  EXPECT_NEAR(item["rho"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(Cli, ExitCodes) {
  const auto bad = write_temp("bad.uhg", "3 5 2\n0 1 2\n");
  EXPECT_EQ(run({"spectral", bad}).code, cli::kParse);
  EXPECT_EQ(run({"spectral", ::testing::TempDir() + "missing.uhg"}).code, cli::kParse);
  EXPECT_EQ(run({"nonsense"}).code, cli::kParse);
  const auto path = write_temp("p4.uhg", serialize_uhg(families::loose_path(4, 3)));
  EXPECT_EQ(run({"spectral", "--alpha", "0.5", "--max-iter", "1", path}).code, cli::kNoConvergence);
  EXPECT_EQ(run({"spectral", "--alpha", "1.5", path}).code, cli::kPrecondition);
  EXPECT_EQ(run({"spectral", "--alpha", "x", path}).code, cli::kParse);
  EXPECT_EQ(run({"spectral", "--tol", "0", path}).code, cli::kPrecondition);
  EXPECT_EQ(run({"generate", "broom", "3", "5", "3"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"enumerate", "hypertrees", "--m", "9", "--k", "3"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, BoundsReport) {
  const auto path = write_temp("star_b.uhg", serialize_uhg(families::hyperstar(4, 3)));
  const auto r = run({"bounds", "--alpha", "0.5", "--format", "json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  bool seen = false;
  for (const auto& b : j["results"][0]["bounds"]) {
    if (b["name"] == "DegreeRoot") {
      seen = true;
      EXPECT_EQ(b["equality"], "Holds");
      EXPECT_NEAR(b["slack"].get<double>(), 0.0, 1e-8);
      EXPECT_NEAR(b["inputs"]["delta"].get<double>(), 3.35530, 1e-5);
    }
    if (b["name"] == "IrregularDiameter") EXPECT_GT(b["slack"].get<double>(), 0.0);
  }
  EXPECT_TRUE(seen);
}

TEST(Cli, RegularBoundsHoldWithZeroSlack) {
  const auto path = write_temp("c4.uhg", "2 4 4\n0 1\n1 2\n2 3\n0 3\n");
  const auto r = run({"bounds", "--alpha", "0.25", "--format", "json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto b = Json::parse(r.out)["results"][0]["bounds"][1];
  EXPECT_EQ(b["name"], "DegreeRoot");
  EXPECT_EQ(b["equality"], "Holds");
  EXPECT_NEAR(b["slack"].get<double>(), 0.0, 1e-10);
}

TEST(Cli, GenerateBroom) {
  const auto r = run({"generate", "broom", "5", "3", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_uhg(r.out), families::broom_S(5, 3, 3));
  const auto rnd1 = run({"generate", "random", "6", "3", "--seed", "9"});
  const auto rnd2 = run({"generate", "random", "6", "3", "--seed", "9"});
  EXPECT_EQ(rnd1.out, rnd2.out);
  const auto j = run({"generate", "star", "3", "3", "--format", "json"});
  EXPECT_EQ(parse_uhg(Json::parse(j.out)["results"][0]["uhg"].get<std::string>()), families::hyperstar(3, 3));
}

TEST(Cli, TransformMove) {
  const auto path = write_temp("p3.uhg", serialize_uhg(families::loose_path(3, 3)));
  const auto out = ::testing::TempDir() + "moved.uhg";
  const auto r = run({"transform", "move", path, "--u", "2", "--spec", R"({"moves":[{"edge":2,"from":4}]})", "--alpha",
                      "0,0.5", "--format", "json", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_TRUE(j["results"][0]["strict_increase"].get<bool>());
  EXPECT_TRUE(isomorphic(read_uhg_file(out), families::hyperstar(3, 3)));
  EXPECT_EQ(parse_uhg(j["result_uhg"].get<std::string>()), read_uhg_file(out));
}

TEST(Cli, TransformErrors) {
  const auto path = write_temp("p3e.uhg", serialize_uhg(families::loose_path(3, 3)));
  EXPECT_EQ(run({"transform", "move", path, "--spec", R"({"u":2,"moves":[{"edge":0,"from":1}]})"}).code,
            cli::kPrecondition);
  EXPECT_EQ(run({"transform", "move", path, "--spec", "{not json"}).code, cli::kParse);
  EXPECT_EQ(run({"transform", "graft", path, "--spec", R"({"u":0,"p":2,"q":0})"}).code, cli::kPrecondition);
  const auto ok = run({"transform", "graft", path, "--spec", R"({"u":0,"p":2,"q":1})"});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, EnumerateAndVerify) {
  const auto e = run({"enumerate", "hypertrees", "--m", "3", "--k", "3", "--format", "json"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(Json::parse(e.out)["inputs"]["count"], 2);
  const auto v = run({"verify", "hypertrees", "--m", "3", "--k", "3", "--format", "json"});
  ASSERT_EQ(v.code, 0) << v.err;
  const auto j = Json::parse(v.out);
  EXPECT_TRUE(j["results"][0]["match"].get<bool>());
  EXPECT_EQ(j["alpha"].size(), 4u);
  EXPECT_EQ(run({"verify", "unicyclic", "--m", "3", "--k", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "hypertrees", "--m", "4", "--k", "3", "--diameter", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "broom", "--m", "5", "--k", "3", "--alpha", "0,0.5"}).code, 0);
}
