#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "hyperrho/error.hpp"
#include "hyperrho/families.hpp"
#include "hyperrho/hypergraph.hpp"

using namespace hyperrho;

namespace {

Errc parse_error(const std::string& text) {
  try {
    parse_uhg(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::InvalidParams;
}

}  // namespace

TEST(Uhg, RoundTrip) {
  for (auto g : {families::broom_S(5, 3, 3), families::cactus_H(5, 2, 3), families::spider_T(6, 4, 2)}) {
    const auto text = serialize_uhg(g);
    EXPECT_EQ(parse_uhg(text), g);
    EXPECT_EQ(serialize_uhg(parse_uhg(text)), text);
  }
}

TEST(Uhg, SerializedLayout) {
  EXPECT_EQ(serialize_uhg(families::loose_path(2, 3)), "3 5 2\n0 1 2\n2 3 4\n");
}

TEST(Uhg, CommentsAndWhitespace) {
  const auto g = parse_uhg("# a path\n3 5 2   # header\n\n 2 1 0\n# middle\n4 3 2\n");
  EXPECT_EQ(g, families::loose_path(2, 3));
}

TEST(Uhg, Errors) {
  EXPECT_EQ(parse_error(""), Errc::SyntaxError);
  EXPECT_EQ(parse_error("3 5"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("3 5 x\n"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("3 5 2\n0 1 2\n"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("3 5 1\n0 1 2\n2 3 4\n"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("3 5 1\n0 1\n"), Errc::EdgeWrongSize);
  EXPECT_EQ(parse_error("3 5 1\n0 1 7\n"), Errc::VertexOutOfRange);
  EXPECT_EQ(parse_error("3 5 2\n0 1 2\n2 1 0\n"), Errc::DuplicateEdge);
  EXPECT_EQ(parse_error("3 5 1\n0 1 1.5\n"), Errc::SyntaxError);
}

TEST(Uhg, FileReading) {
  const std::string path = ::testing::TempDir() + "io_test.uhg";
  {
    std::ofstream f(path);
    f << serialize_uhg(families::hyperstar(3, 4));
  }
  EXPECT_EQ(read_uhg_file(path), families::hyperstar(3, 4));
  std::remove(path.c_str());
  EXPECT_THROW(read_uhg_file(path), Error);
}
