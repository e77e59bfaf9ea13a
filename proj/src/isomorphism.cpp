#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hyperrho/error.hpp"
#include "hyperrho/hypergraph.hpp"

namespace hyperrho {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return h;
}

std::uint64_t hash_sorted(std::vector<std::uint64_t>& values, std::uint64_t seed) {
  std::sort(values.begin(), values.end());
  std::uint64_t h = seed;
  for (auto v : values) h = mix(h, v);
  return mix(h, values.size());
}

// Colour refinement over hyperedges, run for a fixed number of rounds so that
// values computed on two different hypergraphs are directly comparable.
std::vector<std::uint64_t> refine(const UniformHypergraph& g, std::span<const int> initial) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::uint64_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t base = initial.empty() ? 0 : static_cast<std::uint64_t>(initial[v]);
    colour[v] = mix(mix(17, base), static_cast<std::uint64_t>(g.degree(static_cast<Vertex>(v))));
  }
  std::vector<std::uint64_t> next(n), per_edge, others;
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      per_edge.clear();
      for (std::size_t e : g.incident_edges(static_cast<Vertex>(v))) {
        others.clear();
        for (Vertex w : g.edge(e)) {
          if (static_cast<std::size_t>(w) != v) others.push_back(colour[static_cast<std::size_t>(w)]);
        }
        per_edge.push_back(hash_sorted(others, 0x51));
      }
      next[v] = hash_sorted(per_edge, colour[v]);
    }
    colour.swap(next);
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const UniformHypergraph& g, const UniformHypergraph& h, std::vector<std::uint64_t> gc,
          std::vector<std::uint64_t> hc)
      : g_(g), h_(h), gc_(std::move(gc)), hc_(std::move(hc)) {
    const auto n = static_cast<std::size_t>(g.n());
    g_co_ = co_occurrence(g);
    h_co_ = co_occurrence(h);
    build_order();
    map_.assign(n, -1);
    used_.assign(n, 0);
  }

  std::optional<std::vector<Vertex>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<int> co_occurrence(const UniformHypergraph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> co(n * n, 0);
    for (std::size_t e = 0; e < g.m(); ++e) {
      auto ev = g.edge(e);
      for (Vertex a : ev) {
        for (Vertex b : ev) {
          if (a != b) ++co[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
        }
      }
    }
    return co;
  }

  void build_order() {
    const auto n = static_cast<std::size_t>(g_.n());
    std::unordered_map<std::uint64_t, int> class_size;
    for (auto c : gc_) ++class_size[c];
    std::vector<char> placed(n, 0), frontier(n, 0);
    std::vector<std::size_t> position(n);
    while (order_.size() < n) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n) {
          best = v;
          continue;
        }
        const auto key = [&](std::size_t x) { return std::pair{!frontier[x], class_size[gc_[x]]}; };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = 1;
      position[best] = order_.size();
      order_.push_back(static_cast<Vertex>(best));
      for (std::size_t e : g_.incident_edges(static_cast<Vertex>(best))) {
        for (Vertex w : g_.edge(e)) frontier[static_cast<std::size_t>(w)] = 1;
      }
    }
    // Edge e becomes fully mapped when its last vertex (in search order) is placed.
    completes_.assign(n, {});
    for (std::size_t e = 0; e < g_.m(); ++e) {
      std::size_t last = 0;
      for (Vertex w : g_.edge(e)) last = std::max(last, position[static_cast<std::size_t>(w)]);
      completes_[last].push_back(e);
    }
  }

  bool consistent(std::size_t depth, Vertex v, Vertex w) const {
    const auto n = static_cast<std::size_t>(g_.n());
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      const Vertex fu = map_[static_cast<std::size_t>(u)];
      if (g_co_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] !=
          h_co_[static_cast<std::size_t>(w) * n + static_cast<std::size_t>(fu)]) {
        return false;
      }
    }
    return true;
  }

  bool edges_ok(std::size_t depth) const {
    std::vector<Vertex> image;
    for (std::size_t e : completes_[depth]) {
      image.clear();
      for (Vertex x : g_.edge(e)) image.push_back(map_[static_cast<std::size_t>(x)]);
      if (!h_.has_edge(image)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.n(); ++w) {
      if (used_[static_cast<std::size_t>(w)] || hc_[static_cast<std::size_t>(w)] != gc_[static_cast<std::size_t>(v)]) {
        continue;
      }
      if (!consistent(depth, v, w)) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      if (edges_ok(depth) && search(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = 0;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const UniformHypergraph& g_;
  const UniformHypergraph& h_;
  std::vector<std::uint64_t> gc_, hc_;
  std::vector<int> g_co_, h_co_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> completes_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const UniformHypergraph& g, const UniformHypergraph& h,
                                                    std::span<const int> g_colours,
                                                    std::span<const int> h_colours) {
  if (g.k() != h.k() || g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  if (g_colours.size() != h_colours.size() ||
      (!g_colours.empty() && g_colours.size() != static_cast<std::size_t>(g.n()))) {
    throw Error(Errc::DimensionMismatch, "colour vectors must both be empty or have length n");
  }
  auto gc = refine(g, g_colours);
  auto hc = refine(h, h_colours);
  auto gs = gc, hs = hc;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;
  return Matcher(g, h, std::move(gc), std::move(hc)).run();
}

bool isomorphic(const UniformHypergraph& g, const UniformHypergraph& h) {
  return find_isomorphism(g, h).has_value();
}

bool same_orbit(const UniformHypergraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw Error(Errc::VertexOutOfRange, "orbit query");
  if (u == v) return true;
  std::vector<int> cu(static_cast<std::size_t>(g.n()), 0), cv(static_cast<std::size_t>(g.n()), 0);
  cu[static_cast<std::size_t>(u)] = 1;
  cv[static_cast<std::size_t>(v)] = 1;
  return find_isomorphism(g, g, cu, cv).has_value();
}

bool sets_in_same_orbit(const UniformHypergraph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  if (from.size() != to.size()) return false;
  std::vector<int> cf(static_cast<std::size_t>(g.n()), 0), ct(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : from) {
    if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "orbit query");
    cf[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : to) {
    if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "orbit query");
    ct[static_cast<std::size_t>(v)] = 1;
  }
  return find_isomorphism(g, g, cf, ct).has_value();
}

std::vector<std::vector<Vertex>> vertex_orbits(const UniformHypergraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  const auto colour = refine(g, {});
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<Vertex>> orbits;
  for (std::size_t v = 0; v < n; ++v) {
    if (orbit_of[v] >= 0) continue;
    orbit_of[v] = static_cast<int>(orbits.size());
    orbits.push_back({static_cast<Vertex>(v)});
    for (std::size_t w = v + 1; w < n; ++w) {
      if (orbit_of[w] >= 0 || colour[w] != colour[v]) continue;
      if (same_orbit(g, static_cast<Vertex>(v), static_cast<Vertex>(w))) {
        orbit_of[w] = orbit_of[v];
        orbits.back().push_back(static_cast<Vertex>(w));
      }
    }
  }
  return orbits;
}

std::uint64_t invariant_hash(const UniformHypergraph& g) {
  auto colour = refine(g, {});
  std::uint64_t h = mix(mix(mix(1, static_cast<std::uint64_t>(g.k())), static_cast<std::uint64_t>(g.n())), g.m());
  return hash_sorted(colour, h);
}

}  // namespace hyperrho
