#include "hyperrho/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperrho/bounds.hpp"
#include "hyperrho/error.hpp"
#include "hyperrho/extremal.hpp"
#include "hyperrho/families.hpp"
#include "hyperrho/hypergraph.hpp"
#include "hyperrho/spectral.hpp"
#include "hyperrho/transforms.hpp"

namespace hyperrho::cli {
namespace {

using Json = nlohmann::ordered_json;

// Malformed input files, transform specs or flag values.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string alpha_text;
  double tol = 1e-12;
  long max_iter = 1'000'000;
  std::uint64_t seed = 0;
  std::string format = "human";
  std::string out_path;
};

double num(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json numbers(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(num(v));
  return a;
}

Json vertex_list(std::span<const Vertex> values) {
  Json a = Json::array();
  for (Vertex v : values) a.push_back(v);
  return a;
}

std::vector<double> parse_alpha_values(const std::string& text, const std::vector<double>& fallback) {
  if (text.empty()) return fallback;
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("bad --alpha value '" + item + "'");
    out.push_back(Alpha(v).value());
  }
  if (out.empty()) throw InputError("--alpha needs at least one value");
  return out;
}

SpectralOptions spectral_options(const Settings& s) {
  if (!(s.tol > 0.0)) throw Error(Errc::InvalidParams, "--tol must be positive");
  if (s.max_iter <= 0) throw Error(Errc::InvalidParams, "--max-iter must be positive");
  SpectralOptions opts;
  opts.tol = s.tol;
  opts.max_iter = s.max_iter;
  return opts;
}

Json tolerance_inputs(const SpectralOptions& opts) {
  return {{"tol", num(opts.tol)},
          {"residual_tol", num(opts.residual_tol)},
          {"max_iter", opts.max_iter},
          {"shift", num(opts.shift)}};
}

UniformHypergraph load(const std::string& path) {
  try {
    if (path == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      return parse_uhg(buf.str());
    }
    return read_uhg_file(path);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json report_skeleton(const std::string& command, Json inputs, const std::vector<double>& alphas) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["alpha"] = numbers(alphas);
  r["results"] = Json::array();
  r["version"] = kVersion;
  return r;
}

// ---- human rendering -------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "null";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
  return buf;
}

bool is_flat(const Json& v) {
  if (v.is_primitive()) return true;
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string flat_text(const Json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void render(const Json& j, std::ostream& os, const std::string& pad) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
        os << pad << key << ": |\n";
        std::stringstream lines(v.get<std::string>());
        for (std::string line; std::getline(lines, line);) os << pad << "  " << line << '\n';
      } else if (is_flat(v)) {
        os << pad << key << ": " << flat_text(v) << '\n';
      } else {
        os << pad << key << ":\n";
        render(v, os, pad + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_flat(item)) {
        os << pad << "- " << flat_text(item) << '\n';
      } else {
        os << pad << "-\n";
        render(item, os, pad + "  ");
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::InvalidParams, "cannot write " + path);
  f << text;
}

std::string format_report(const Json& report, const Settings& s) {
  if (s.format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  render(report, os, "");
  return os.str();
}

// ---- spectral / bounds -----------------------------------------------------

Json spectral_item(const SpectralResult& r) {
  return {{"rho", num(r.rho)},
          {"iterations", r.iterations},
          {"residual_inf", num(r.residual_inf)},
          {"bracket", numbers(std::vector<double>{r.bracket_lo, r.bracket_hi})},
          {"perron", numbers(r.perron)}};
}

Json graph_inputs(const std::string& path, const UniformHypergraph& g) {
  return {{"file", path}, {"k", g.k()}, {"n", g.n()}, {"m", g.m()}, {"connected", is_connected(g)}};
}

Json cmd_spectral(const Settings& s, const std::string& path) {
  const auto g = load(path);
  const auto alphas = parse_alpha_values(s.alpha_text, {0.0});
  const auto opts = spectral_options(s);
  auto inputs = graph_inputs(path, g);
  inputs.update(tolerance_inputs(opts));
  auto report = report_skeleton("spectral", std::move(inputs), alphas);
  const bool connected = is_connected(g);
  for (double a : alphas) {
    Json item{{"alpha", num(a)}};
    if (connected) {
      item.update(spectral_item(spectral_radius(g, Alpha(a), opts)));
    } else {
      const auto parts = component_spectra(g, Alpha(a), opts);
      std::size_t best = 0;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].result.rho > parts[best].result.rho) best = i;
      }
      item["rho"] = num(parts[best].result.rho);
      item["max_component"] = best;
      Json comps = Json::array();
      for (const auto& part : parts) {
        Json c{{"vertices", vertex_list(part.vertices)}};
        c.update(spectral_item(part.result));
        comps.push_back(std::move(c));
      }
      item["components"] = std::move(comps);
    }
    report["results"].push_back(std::move(item));
  }
  return report;
}

Json bound_item(const BoundReport& b, double rho) {
  Json inputs = Json::object();
  for (const auto& [key, v] : b.inputs) inputs[key] = num(v);
  return {{"name", std::string(bound_name(b.name))},
          {"value", num(b.value)},
          {"slack", num(b.value - rho)},
          {"equality", std::string(equality_name(b.equality_case))},
          {"certificate", b.certificate},
          {"diagnostic", b.diagnostic},
          {"inputs", std::move(inputs)}};
}

Json cmd_bounds(const Settings& s, const std::string& path) {
  const auto g = load(path);
  const auto alphas = parse_alpha_values(s.alpha_text, {0.0});
  const auto opts = spectral_options(s);
  auto inputs = graph_inputs(path, g);
  inputs.update(tolerance_inputs(opts));
  inputs["equality_gap"] = num(kEqualityGap);
  auto report = report_skeleton("bounds", std::move(inputs), alphas);
  const bool connected = is_connected(g);
  for (double a : alphas) {
    const Alpha alpha(a);
    double rho = 0.0;
    std::vector<BoundReport> bounds;
    if (connected) {
      const auto res = spectral_radius(g, alpha, opts);
      rho = res.rho;
      bounds = all_bounds(g, alpha, &res);
    } else {
      rho = spectral_radius_any(g, alpha, opts);
      bounds = all_bounds(g, alpha, nullptr);
    }
    Json list = Json::array();
    for (const auto& b : bounds) list.push_back(bound_item(b, rho));
    report["results"].push_back({{"alpha", num(a)}, {"rho", num(rho)}, {"bounds", std::move(list)}});
  }
  return report;
}

// ---- transform ---------------------------------------------------------------

Json read_spec(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '{') {
    std::ifstream f(spec);
    if (!f) throw InputError("cannot open transform spec " + spec);
    std::stringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("transform spec: ") + e.what());
  }
}

template <typename T>
T field(const Json& spec, const char* key) {
  try {
    return spec.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("transform spec needs '") + key + "'");
  }
}

Json outcome_item(double a, const TransformOutcome& o) {
  Json evidence = Json::object();
  for (const auto& [key, v] : o.evidence) evidence[key] = num(v);
  return {{"alpha", num(a)},
          {"rho_before", num(o.rho_before)},
          {"rho_after", num(o.rho_after)},
          {"strict_increase", o.strict_increase},
          {"hypothesis_verified", o.hypothesis_verified},
          {"evidence", std::move(evidence)}};
}

struct TransformArgs {
  std::string input;
  std::string spec;
  std::optional<int> u;
};

Json cmd_transform(const Settings& s, const std::string& kind, const TransformArgs& t, std::ostream& out) {
  const auto g = load(t.input);
  const auto alphas = parse_alpha_values(s.alpha_text, {0.0});
  const auto opts = spectral_options(s);
  Json spec = t.spec.empty() ? Json::object() : read_spec(t.spec);
  if (t.u) spec["u"] = *t.u;

  std::function<TransformOutcome(Alpha)> check;
  std::optional<UniformHypergraph> result;
  if (kind == "move") {
    const auto u = field<Vertex>(spec, "u");
    std::vector<EdgeMove> moves;
    for (const auto& mv : field<Json>(spec, "moves")) {
      moves.push_back({field<std::size_t>(mv, "edge"), field<Vertex>(mv, "from")});
    }
    result = move_edges(g, u, moves);
    check = [&, u, moves](Alpha a) { return check_move_increase(g, a, u, moves, opts); };
  } else if (kind == "switch") {
    const auto e = field<std::size_t>(spec, "e");
    const auto f = field<std::size_t>(spec, "f");
    const auto U = field<std::vector<Vertex>>(spec, "U");
    const auto V = field<std::vector<Vertex>>(spec, "V");
    result = switch_edges(g, e, f, U, V);
    check = [&, e, f, U, V](Alpha a) { return check_switch_increase(g, a, e, f, U, V, opts); };
  } else if (kind == "graft") {
    const auto u = field<Vertex>(spec, "u");
    const int p = field<int>(spec, "p");
    const int q = field<int>(spec, "q");
    result = graft(g, u, p, q);
    check = [&, u, p, q](Alpha a) { return check_graft_compare(g, a, u, p, q, opts); };
  } else {
    const auto e = field<std::size_t>(spec, "edge");
    const auto keep = field<Vertex>(spec, "keep");
    std::optional<Vertex> stay;
    if (spec.contains("stay")) stay = field<Vertex>(spec, "stay");
    result = consolidate_branches(g, e, keep, stay);
    check = [&, e, keep, stay](Alpha a) { return check_consolidate_increase(g, a, e, keep, stay, opts); };
  }

  auto inputs = graph_inputs(t.input, g);
  inputs["transform"] = kind;
  inputs["spec"] = spec;
  inputs["hypothesis_margin"] = num(kHypothesisMargin);
  inputs["increase_margin"] = num(kIncreaseMargin);
  inputs.update(tolerance_inputs(opts));
  auto report = report_skeleton("transform", std::move(inputs), alphas);
  report["result_uhg"] = serialize_uhg(*result);
  for (double a : alphas) report["results"].push_back(outcome_item(a, check(Alpha(a))));
  if (!s.out_path.empty()) write_text(serialize_uhg(*result), s.out_path, out);
  return report;
}

// ---- generate / enumerate ---------------------------------------------------

UniformHypergraph generated(const std::string& family, const std::vector<int>& p, std::uint64_t seed) {
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw InputError("usage: generate " + family + " " + usage);
  };
  if (family == "random") {
    need(2, "m k");
    return random_connected(p[0], p[1], seed);
  }
  const auto kind = families::parse_family(family);
  if (kind == families::Family::Star || kind == families::Family::LoosePath) {
    need(2, "m k");
    return families::generate({kind, p[0], p[1], 0});
  }
  need(3, "m x k");
  return families::generate({kind, p[0], p[2], p[1]});
}

Json class_item(const UniformHypergraph& g) {
  const auto c = classify(g);
  return {{"n", g.n()},
          {"m", g.m()},
          {"diameter", diameter(g)},
          {"pendant_edges", pendant_edge_count(g)},
          {"cycles", c.cycle_count},
          {"uhg", serialize_uhg(g)}};
}

struct ShapeArgs {
  int m = 3;
  int k = 3;
  int r = 0;
  std::optional<int> diameter;
  std::optional<int> pendant;
};

Json cmd_enumerate(const std::string& what, const ShapeArgs& a) {
  const auto classes = what == "hypertrees" ? enumerate_hypertrees(a.m, a.k) : enumerate_hypercacti(a.m, a.k, a.r);
  Json inputs{{"class", what}, {"m", a.m}, {"k", a.k}};
  if (what == "hypercacti") inputs["r"] = a.r;
  inputs["count"] = classes.size();
  auto report = report_skeleton("enumerate", std::move(inputs), {});
  for (const auto& g : classes) report["results"].push_back(class_item(g));
  return report;
}

// ---- verify ---------------------------------------------------------------------

Json extremal_item(const EnumerationReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"alpha", num(v.alpha)},
                        {"winner_rho", num(v.winner_rho)},
                        {"runner_up_rho", num(v.runner_up_rho)},
                        {"gap", num(v.winner_rho - v.runner_up_rho)},
                        {"match", v.match},
                        {"unique", v.unique},
                        {"winner_uhg", serialize_uhg(r.classes[v.winner].graph)}});
  }
  return {{"constraint", describe(r.constraint)},
          {"classes", r.classes.size()},
          {"match", r.match},
          {"unique", r.unique},
          {"expected_uhg", serialize_uhg(r.expected)},
          {"verdicts", std::move(verdicts)}};
}

std::vector<FamilyConstraint> desk_scale_constraints() {
  std::vector<FamilyConstraint> out;
  auto trees = [&](int k, int m) {
    out.push_back({ConstraintKind::Hypertrees, m, k, 0});
    for (int d = 2; d <= m; ++d) out.push_back({ConstraintKind::Diameter, m, k, d});
    for (int t = 2; t <= m; ++t) out.push_back({ConstraintKind::Pendant, m, k, t});
  };
  for (int m : {2, 3, 4}) trees(3, m);
  for (int m : {3, 4, 5}) trees(2, m);
  for (int m : {2, 3}) out.push_back({ConstraintKind::Unicyclic, m, 3, 1});
  for (int r : {1, 2}) out.push_back({ConstraintKind::Hypercacti, 4, 3, r});
  return out;
}

Json broom_items(const std::vector<ChainReport>& chains) {
  Json items = Json::array();
  for (const auto& c : chains) {
    Json chain = Json::array();
    for (std::size_t i = 0; i < c.rho.size(); ++i) chain.push_back({{"d", i + 2}, {"rho", num(c.rho[i])}});
    items.push_back({{"alpha", num(c.alpha)}, {"strict", true}, {"chain", std::move(chain)}});
  }
  return items;
}

int cmd_verify(const Settings& s, const std::string& what, const ShapeArgs& a, Json& report, std::ostream& err) {
  const auto alphas = parse_alpha_values(s.alpha_text, kDefaultAlphaGrid);
  const auto opts = spectral_options(s);
  Json inputs{{"suite", what}};
  if (what != "all") {
    inputs["m"] = a.m;
    inputs["k"] = a.k;
  }
  inputs["uniqueness_margin"] = num(kUniquenessMargin);
  inputs.update(tolerance_inputs(opts));

  std::vector<FamilyConstraint> constraints;
  if (what == "hypertrees") {
    if (a.diameter && a.pendant) throw InputError("--diameter and --pendant are exclusive");
    if (a.diameter) {
      constraints.push_back({ConstraintKind::Diameter, a.m, a.k, *a.diameter});
    } else if (a.pendant) {
      constraints.push_back({ConstraintKind::Pendant, a.m, a.k, *a.pendant});
    } else {
      constraints.push_back({ConstraintKind::Hypertrees, a.m, a.k, 0});
    }
  } else if (what == "unicyclic") {
    constraints.push_back({ConstraintKind::Unicyclic, a.m, a.k, 1});
  } else if (what == "hypercacti") {
    inputs["r"] = a.r;
    constraints.push_back({ConstraintKind::Hypercacti, a.m, a.k, a.r});
  } else if (what == "all") {
    constraints = desk_scale_constraints();
  }
  report = report_skeleton("verify", std::move(inputs), alphas);

  int code = kOk;
  for (const auto& c : constraints) {
    try {
      report["results"].push_back(extremal_item(verify_extremal(c, alphas, opts)));
    } catch (const ExtremalMismatchError& e) {
      err << e.what() << '\n';
      report["results"].push_back(extremal_item(e.report()));
      code = kMismatch;
    }
  }
  if (what == "broom" || what == "all") {
    const int m = what == "all" ? 5 : a.m;
    const int k = what == "all" ? 3 : a.k;
    try {
      Json item{{"broom_chain", "m=" + std::to_string(m) + " k=" + std::to_string(k)}};
      item["chains"] = broom_items(verify_broom_chain(m, k, alphas, opts));
      report["results"].push_back(std::move(item));
    } catch (const Error& e) {
      if (e.code() != Errc::ChainViolation) throw;
      err << e.what() << '\n';
      report["results"].push_back({{"broom_chain", "m=" + std::to_string(m) + " k=" + std::to_string(k)},
                                   {"strict", false},
                                   {"error", e.what()}});
      code = kMismatch;
    }
  }
  return code;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return kParse;
    case Errc::NoConvergence: return kNoConvergence;
    case Errc::ExtremalMismatch:
    case Errc::MonotonicityViolation:
    case Errc::ChainViolation: return kMismatch;
    default: return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alpha-spectral radius toolkit for uniform hypergraphs", "hyperrho"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Settings s;
  app.add_option("--alpha", s.alpha_text, "Comma-separated alpha values in [0,1)");
  app.add_option("--tol", s.tol, "Relative bracket tolerance of the power iteration");
  app.add_option("--max-iter", s.max_iter, "Iteration cap of the power iteration");
  app.add_option("--seed", s.seed, "Seed for the random generator");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--out", s.out_path, "Write the output (or the transformed .uhg) to this file");

  std::string input;
  auto* spectral = app.add_subcommand("spectral", "Alpha-spectral radius and Perron vector");
  spectral->add_option("input", input, ".uhg file ('-' for stdin)")->required();
  auto* bounds = app.add_subcommand("bounds", "Upper bounds with slack and equality diagnosis");
  bounds->add_option("input", input, ".uhg file ('-' for stdin)")->required();

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Apply a rewiring and compare spectral radii");
  transform->require_subcommand(1);
  for (const char* kind : {"move", "switch", "graft", "consolidate"}) {
    auto* sub = transform->add_subcommand(kind, std::string("Run the ") + kind + " transform");
    sub->add_option("input", targs.input, ".uhg file ('-' for stdin)")->required();
    sub->add_option("--spec", targs.spec, "Transform description: inline JSON or a JSON file");
    if (std::string(kind) == "move") sub->add_option("--u", targs.u, "Target vertex");
  }

  std::string family;
  std::vector<int> params;
  auto* generate = app.add_subcommand("generate", "Write a family member as .uhg");
  generate->add_option("family", family, "star | path | cactus | broom | spider | random")->required();
  generate->add_option("params", params, "m [r|d|t] k")->required();

  ShapeArgs shape;
  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes");
  enumerate->require_subcommand(1);
  for (const char* what : {"hypertrees", "hypercacti"}) {
    auto* sub = enumerate->add_subcommand(what, std::string("Enumerate ") + what);
    sub->add_option("--m", shape.m, "Number of edges")->required();
    sub->add_option("--k", shape.k, "Edge size")->required();
    if (std::string(what) == "hypercacti") sub->add_option("--r", shape.r, "Number of cycles")->required();
  }

  auto* verify = app.add_subcommand("verify", "Check the extremal hypergraphs by exhaustive enumeration");
  verify->require_subcommand(1);
  for (const char* what : {"hypertrees", "unicyclic", "hypercacti", "broom", "all"}) {
    auto* sub = verify->add_subcommand(what, std::string("Verify ") + what);
    if (std::string(what) == "all") continue;
    sub->add_option("--m", shape.m, "Number of edges")->required();
    sub->add_option("--k", shape.k, "Edge size")->required();
    if (std::string(what) == "hypertrees") {
      sub->add_option("--diameter", shape.diameter, "Restrict to this diameter");
      sub->add_option("--pendant", shape.pendant, "Restrict to this many pendant edges");
    }
    if (std::string(what) == "hypercacti") sub->add_option("--r", shape.r, "Number of cycles")->required();
  }

  std::vector<std::string> argv_store{"hyperrho"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    Json report;
    int code = kOk;
    if (*spectral) {
      report = cmd_spectral(s, input);
    } else if (*bounds) {
      report = cmd_bounds(s, input);
    } else if (*transform) {
      const auto* sub = transform->get_subcommands().front();
      report = cmd_transform(s, sub->get_name(), targs, out);
      out << format_report(report, s);
      return kOk;
    } else if (*generate) {
      const auto g = generated(family, params, s.seed);
      if (s.format == "human") {
        write_text(serialize_uhg(g), s.out_path, out);
        return kOk;
      }
      report = report_skeleton("generate", {{"family", family}, {"params", params}, {"seed", s.seed}}, {});
      report["results"].push_back(class_item(g));
    } else if (*enumerate) {
      report = cmd_enumerate(enumerate->get_subcommands().front()->get_name(), shape);
    } else if (*verify) {
      code = cmd_verify(s, verify->get_subcommands().front()->get_name(), shape, report, err);
    }
    write_text(format_report(report, s), s.out_path, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
}

}  // namespace hyperrho::cli
