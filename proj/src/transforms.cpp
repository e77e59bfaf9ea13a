#include "hyperrho/transforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hyperrho/error.hpp"

namespace hyperrho {
namespace {

void require_vertex(const UniformHypergraph& g, Vertex v) {
  if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " is not in G");
}

void require_edge(const UniformHypergraph& g, std::size_t e) {
  if (e >= g.m()) throw Error(Errc::InvalidParams, "edge index " + std::to_string(e) + " is out of range");
}

std::string edge_text(const std::vector<Vertex>& e) {
  std::string s;
  for (Vertex v : e) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "{" + s + "}";
}

// Removes `removed` edge indices and adds `added`, rejecting any added edge
// that is present in g or duplicated among the additions.
UniformHypergraph rewire(const UniformHypergraph& g, const std::set<std::size_t>& removed, EdgeList added) {
  std::set<std::vector<Vertex>> fresh;
  for (auto& e : added) {
    std::sort(e.begin(), e.end());
    if (g.has_edge(e) || !fresh.insert(e).second) {
      throw Error(Errc::EdgeCollision, "new edge " + edge_text(e) + " already exists");
    }
  }
  EdgeList edges;
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (removed.count(i) == 0) edges.emplace_back(g.edge(i).begin(), g.edge(i).end());
  }
  edges.insert(edges.end(), added.begin(), added.end());
  return UniformHypergraph::build(g.k(), g.n(), std::move(edges));
}

double product(std::span<const double> x, std::span<const Vertex> vertices) {
  double p = 1.0;
  for (Vertex v : vertices) p *= x[static_cast<std::size_t>(v)];
  return p;
}

void finish(TransformOutcome& out, const char* what) {
  out.strict_increase = out.rho_after > out.rho_before + kIncreaseMargin;
  if (out.hypothesis_verified && !out.strict_increase) {
    std::ostringstream msg;
    msg.precision(15);
    msg << what << ": hypothesis verified but rho went from " << out.rho_before << " to " << out.rho_after;
    throw Error(Errc::MonotonicityViolation, msg.str());
  }
}

SpectralResult perron_of(const UniformHypergraph& g, Alpha alpha, const SpectralOptions& opts) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "the Perron vector needs a connected hypergraph");
  return spectral_radius(g, alpha, opts);
}

}  // namespace

UniformHypergraph move_edges(const UniformHypergraph& g, Vertex u, std::span<const EdgeMove> moves) {
  require_vertex(g, u);
  if (moves.empty()) throw Error(Errc::InvalidParams, "at least one edge must be moved");
  std::set<std::size_t> removed;
  EdgeList added;
  for (const auto& mv : moves) {
    require_edge(g, mv.edge);
    if (!removed.insert(mv.edge).second) {
      throw Error(Errc::InvalidParams, "edge " + std::to_string(mv.edge) + " is moved twice");
    }
    if (g.edge_contains(mv.edge, u)) {
      throw Error(Errc::VertexInEdge, "target vertex " + std::to_string(u) + " already lies in edge " +
                                          std::to_string(mv.edge));
    }
    if (!g.edge_contains(mv.edge, mv.from)) {
      throw Error(Errc::VertexNotInEdge, "vertex " + std::to_string(mv.from) + " is not in edge " +
                                             std::to_string(mv.edge));
    }
    std::vector<Vertex> moved;
    for (Vertex v : g.edge(mv.edge)) moved.push_back(v == mv.from ? u : v);
    added.push_back(std::move(moved));
  }
  return rewire(g, removed, std::move(added));
}

TransformOutcome check_move_increase(const UniformHypergraph& g, Alpha alpha, Vertex u,
                                     std::span<const EdgeMove> moves, const SpectralOptions& opts) {
  auto moved = move_edges(g, u, moves);
  const auto before = perron_of(g, alpha, opts);
  const auto& x = before.perron;
  const double xu = x[static_cast<std::size_t>(u)];
  double max_from = 0.0;
  bool verified = true;
  for (const auto& mv : moves) {
    const double xv = x[static_cast<std::size_t>(mv.from)];
    max_from = std::max(max_from, xv);
    if (!(xu - xv > kHypothesisMargin || same_orbit(g, u, mv.from))) verified = false;
  }
  TransformOutcome out{std::move(moved)};
  out.evidence = {{"x_u", xu}, {"max_x_from", max_from}, {"margin", xu - max_from}};
  out.rho_before = before.rho;
  out.rho_after = spectral_radius_any(out.result, alpha, opts);
  out.hypothesis_verified = verified;
  finish(out, "edge moving");
  return out;
}

UniformHypergraph switch_edges(const UniformHypergraph& g, std::size_t e, std::size_t f,
                               std::span<const Vertex> U, std::span<const Vertex> V) {
  require_edge(g, e);
  require_edge(g, f);
  auto ev = g.edge(e);
  auto fv = g.edge(f);
  for (Vertex v : ev) {
    if (g.edge_contains(f, v)) throw Error(Errc::OverlappingEdges, "the two edges share vertex " + std::to_string(v));
  }
  const std::set<Vertex> us(U.begin(), U.end()), vs(V.begin(), V.end());
  if (us.size() != U.size() || vs.size() != V.size() || U.size() != V.size() || U.empty() ||
      U.size() > static_cast<std::size_t>(g.k() - 1)) {
    throw Error(Errc::SizeMismatch, "need 1 <= |U| = |V| <= k-1 with distinct vertices");
  }
  for (Vertex v : U) {
    if (!g.edge_contains(e, v)) throw Error(Errc::VertexNotInEdge, "U contains a vertex outside e");
  }
  for (Vertex v : V) {
    if (!g.edge_contains(f, v)) throw Error(Errc::VertexNotInEdge, "V contains a vertex outside f");
  }
  std::vector<Vertex> e_new(U.begin(), U.end()), f_new(V.begin(), V.end());
  for (Vertex v : fv) {
    if (!vs.count(v)) e_new.push_back(v);
  }
  for (Vertex v : ev) {
    if (!us.count(v)) f_new.push_back(v);
  }
  return rewire(g, {e, f}, {std::move(e_new), std::move(f_new)});
}

TransformOutcome check_switch_increase(const UniformHypergraph& g, Alpha alpha, std::size_t e, std::size_t f,
                                       std::span<const Vertex> U, std::span<const Vertex> V,
                                       const SpectralOptions& opts) {
  auto switched = switch_edges(g, e, f, U, V);
  const auto before = perron_of(g, alpha, opts);
  const auto& x = before.perron;
  std::vector<Vertex> e_rest, f_rest;
  for (Vertex v : g.edge(e)) {
    if (std::find(U.begin(), U.end(), v) == U.end()) e_rest.push_back(v);
  }
  for (Vertex v : g.edge(f)) {
    if (std::find(V.begin(), V.end(), v) == V.end()) f_rest.push_back(v);
  }
  const double xU = product(x, U), xV = product(x, V);
  const double xe = product(x, e_rest), xf = product(x, f_rest);
  const double first = xU - xV;   // needs >= 0
  const double second = xf - xe;  // needs >= 0
  const bool first_ok = first > kHypothesisMargin || sets_in_same_orbit(g, U, V);
  const bool second_ok = second > kHypothesisMargin || sets_in_same_orbit(g, e_rest, f_rest);
  const bool one_strict = first > kHypothesisMargin || second > kHypothesisMargin;

  TransformOutcome out{std::move(switched)};
  out.evidence = {{"x_U", xU}, {"x_V", xV}, {"x_e_minus_U", xe}, {"x_f_minus_V", xf}};
  out.rho_before = before.rho;
  out.rho_after = spectral_radius_any(out.result, alpha, opts);
  out.hypothesis_verified = first_ok && second_ok && one_strict;
  finish(out, "edge switching");
  return out;
}

UniformHypergraph attach_path(const UniformHypergraph& g, Vertex u, int s) {
  require_vertex(g, u);
  if (s < 0) throw Error(Errc::InvalidParams, "path length must be non-negative");
  if (s == 0) return g;
  EdgeList edges = g.edge_list();
  Vertex next = g.n();
  Vertex at = u;
  for (int i = 0; i < s; ++i) {
    std::vector<Vertex> e{at};
    while (static_cast<int>(e.size()) < g.k()) e.push_back(next++);
    at = e.back();
    edges.push_back(std::move(e));
  }
  return UniformHypergraph::build(g.k(), next, std::move(edges));
}

UniformHypergraph graft(const UniformHypergraph& g, Vertex u, int p, int q) {
  if (q < 0 || p < q) throw Error(Errc::InvalidParams, "graft needs p >= q >= 0");
  return attach_path(attach_path(g, u, p), u, q);
}

TransformOutcome check_graft_compare(const UniformHypergraph& g, Alpha alpha, Vertex u, int p, int q,
                                     const SpectralOptions& opts) {
  if (q < 1 || p < q) throw Error(Errc::InvalidParams, "the comparison needs p >= q >= 1");
  if (g.m() < 1) throw Error(Errc::InvalidParams, "base hypergraph needs at least one edge");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "base hypergraph must be connected");
  const auto unbalanced = graft(g, u, p + 1, q - 1);
  TransformOutcome out{graft(g, u, p, q)};
  out.evidence = {{"p", p}, {"q", q}};
  out.rho_before = spectral_radius(unbalanced, alpha, opts).rho;
  out.rho_after = spectral_radius(out.result, alpha, opts).rho;
  out.hypothesis_verified = true;
  finish(out, "pendant path balancing");
  return out;
}

UniformHypergraph consolidate_branches(const UniformHypergraph& g, std::size_t e, Vertex keep,
                                       std::optional<Vertex> stay) {
  require_edge(g, e);
  if (!g.edge_contains(e, keep)) throw Error(Errc::VertexNotInEdge, "keep vertex is not in the edge");
  std::vector<Vertex> branching;
  for (Vertex v : g.edge(e)) {
    if (g.degree(v) >= 2) branching.push_back(v);
  }
  if (branching.size() < 3 || g.degree(keep) < 2) {
    throw Error(Errc::DegreePatternViolated, "the edge needs at least three vertices of degree >= 2, keep among them");
  }
  if (stay) {
    if (*stay == keep || !g.edge_contains(e, *stay) || g.degree(*stay) < 2) {
      throw Error(Errc::DegreePatternViolated, "stay must be another degree >= 2 vertex of the edge");
    }
  } else {
    stay = branching.front() == keep ? branching[1] : branching.front();
  }
  std::vector<Vertex> movers;
  for (Vertex v : branching) {
    if (v != keep && v != *stay) movers.push_back(v);
  }

  std::set<std::size_t> removed;
  EdgeList added;
  for (std::size_t f = 0; f < g.m(); ++f) {
    if (f == e || g.edge_contains(f, keep)) continue;
    auto it = std::find_if(movers.begin(), movers.end(), [&](Vertex v) { return g.edge_contains(f, v); });
    if (it == movers.end()) continue;
    removed.insert(f);
    std::vector<Vertex> moved;
    for (Vertex v : g.edge(f)) moved.push_back(v == *it ? keep : v);
    added.push_back(std::move(moved));
  }
  return rewire(g, removed, std::move(added));
}

TransformOutcome check_consolidate_increase(const UniformHypergraph& g, Alpha alpha, std::size_t e, Vertex keep,
                                            std::optional<Vertex> stay, const SpectralOptions& opts) {
  auto consolidated = consolidate_branches(g, e, keep, stay);
  TransformOutcome out{std::move(consolidated)};
  int branching = 0;
  for (Vertex v : g.edge(e)) branching += g.degree(v) >= 2;
  out.evidence = {{"branching_vertices", branching}, {"keep_degree_after", out.result.degree(keep)}};
  out.rho_before = perron_of(g, alpha, opts).rho;
  out.rho_after = spectral_radius_any(out.result, alpha, opts);
  out.hypothesis_verified = true;
  finish(out, "branch consolidation");
  return out;
}

}  // namespace hyperrho
