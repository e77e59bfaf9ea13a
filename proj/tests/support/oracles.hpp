#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library's numerical or combinatorial routines; only
// the UniformHypergraph container is shared.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hyperrho/hypergraph.hpp"

namespace oracle {

using hyperrho::UniformHypergraph;
using hyperrho::Vertex;

// Plain bisection for f(lo) < 0 <= f(hi).
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 2000 && hi - lo > 0.0; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return lo + 0.5 * (hi - lo);
}

// rho of the hyperstar: the centre and leaf eigenequations reduce to
// (rho - a m)(rho - a)^(k-1) = (1-a)^k m.
inline double star_rho(int m, int k, double a) {
  auto f = [&](double r) { return (r - a * m) * std::pow(r - a, k - 1) - std::pow(1 - a, k) * m; };
  return bisect(f, a * m, static_cast<double>(m) + 1.0);
}

// Root of h(t) = (1-a)D2 t^k + a(D2-D1) t^(k-1) - (1-a)D1 above (D1/D2)^(1/k).
inline double delta_root(int d1, int d2, int k, double a) {
  auto h = [&](double t) {
    return (1 - a) * d2 * std::pow(t, k) + a * (d2 - d1) * std::pow(t, k - 1) - (1 - a) * d1;
  };
  const double lo = std::pow(static_cast<double>(d1) / d2, 1.0 / k);
  double hi = lo + 1.0;
  while (h(hi) < 0.0) hi *= 2.0;
  return bisect(h, lo, hi);
}

// Unoptimised shifted power iteration with explicit loops; returns rho.
inline double naive_rho(const UniformHypergraph& g, double a, int iterations = 200000) {
  const int n = g.n();
  const int k = g.k();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < g.m(); ++e) {
    for (Vertex v : g.edge(e)) ++deg[static_cast<std::size_t>(v)];
  }
  std::vector<double> x(static_cast<std::size_t>(n), std::pow(1.0 / n, 1.0 / k)), y(x.size());
  double lo = 0, hi = 0;
  for (int it = 0; it < iterations; ++it) {
    for (int v = 0; v < n; ++v) y[v] = (a * deg[v] + 1.0) * std::pow(x[v], k - 1);
    for (std::size_t e = 0; e < g.m(); ++e) {
      auto ev = g.edge(e);
      for (int j = 0; j < k; ++j) {
        double p = 1.0;
        for (int i = 0; i < k; ++i) {
          if (i != j) p *= x[ev[i]];
        }
        y[ev[j]] += (1 - a) * p;
      }
    }
    lo = 1e300;
    hi = -1e300;
    for (int v = 0; v < n; ++v) {
      const double r = y[v] / std::pow(x[v], k - 1);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= 1e-13 * hi) break;
    double s = 0;
    for (int v = 0; v < n; ++v) {
      x[v] = std::pow(y[v], 1.0 / (k - 1));
      s += std::pow(x[v], k);
    }
    s = std::pow(s, 1.0 / k);
    for (auto& xv : x) xv /= s;
  }
  return 0.5 * (lo + hi) - 1.0;
}

// Lexicographically least sorted edge list over all vertex permutations.
inline std::vector<std::vector<Vertex>> brute_canonical(const UniformHypergraph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Vertex>> best;
  do {
    std::vector<std::vector<Vertex>> img;
    for (std::size_t e = 0; e < g.m(); ++e) {
      std::vector<Vertex> mapped;
      for (Vertex v : g.edge(e)) mapped.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(mapped.begin(), mapped.end());
      img.push_back(std::move(mapped));
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Simple cycles of the vertex/edge incidence graph, each as the set of
// incidence links it uses (link id = edge * k + position).
struct CycleData {
  std::vector<std::vector<int>> link_sets;
  std::vector<std::set<Vertex>> vertex_sets;
};

inline CycleData incidence_cycles(const UniformHypergraph& g) {
  // Nodes: vertices 0..n-1, edges n..n+m-1.
  const int n = g.n();
  const int k = g.k();
  const int nodes = n + static_cast<int>(g.m());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nodes));
  for (std::size_t e = 0; e < g.m(); ++e) {
    for (int j = 0; j < k; ++j) {
      const int link = static_cast<int>(e) * k + j;
      const Vertex v = g.edge(e)[static_cast<std::size_t>(j)];
      adj[v].push_back({n + static_cast<int>(e), link});
      adj[n + e].push_back({v, link});
    }
  }
  CycleData out;
  std::set<std::vector<int>> seen;
  std::vector<int> path_nodes, path_links;
  std::vector<char> on(static_cast<std::size_t>(nodes), 0);
  // Cycles are rooted at their smallest node so each is found from one start.
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (auto [w, link] : adj[u]) {
      if (!path_links.empty() && link == path_links.back()) continue;
      if (w == start && path_links.size() >= 3) {
        auto links = path_links;
        links.push_back(link);
        std::sort(links.begin(), links.end());
        if (seen.insert(links).second) {
          std::set<Vertex> vs;
          for (int node : path_nodes) {
            if (node < n) vs.insert(node);
          }
          out.link_sets.push_back(links);
          out.vertex_sets.push_back(vs);
        }
        continue;
      }
      if (w <= start || on[w]) continue;
      on[w] = 1;
      path_nodes.push_back(w);
      path_links.push_back(link);
      dfs(start, w);
      path_links.pop_back();
      path_nodes.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < nodes; ++s) {
    on[s] = 1;
    path_nodes = {s};
    dfs(s, s);
    on[s] = 0;
  }
  return out;
}

// Rank over GF(2) of the cycle link vectors: the cycle-space dimension.
inline int cycle_rank(const UniformHypergraph& g, const CycleData& c) {
  const std::size_t links = g.m() * static_cast<std::size_t>(g.k());
  std::vector<std::vector<char>> rows;
  for (const auto& set : c.link_sets) {
    std::vector<char> row(links, 0);
    for (int l : set) row[static_cast<std::size_t>(l)] = 1;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < links && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && rows[r][col]) {
        for (std::size_t i = 0; i < links; ++i) rows[r][i] ^= rows[static_cast<std::size_t>(rank)][i];
      }
    }
    ++rank;
  }
  return rank;
}

inline bool connected(const UniformHypergraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (std::size_t e = 0; e < g.m(); ++e) {
    for (Vertex v : g.edge(e)) parent[find(v)] = find(g.edge(e)[0]);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// Connected and every two Berge cycles share at most one vertex.
inline bool brute_hypercactus(const UniformHypergraph& g, const CycleData& c) {
  if (!connected(g)) return false;
  for (std::size_t i = 0; i < c.vertex_sets.size(); ++i) {
    for (std::size_t j = i + 1; j < c.vertex_sets.size(); ++j) {
      int common = 0;
      for (Vertex v : c.vertex_sets[i]) common += c.vertex_sets[j].count(v) > 0;
      if (common > 1) return false;
    }
  }
  return true;
}

// All isomorphism classes of connected k-uniform hypergraphs on n vertices
// with m edges that satisfy `keep`, by brute force over edge subsets.
inline std::set<std::vector<std::vector<Vertex>>> brute_classes(
    int n, int m, int k, const std::function<bool(const UniformHypergraph&)>& keep) {
  std::vector<std::vector<Vertex>> all_edges;
  std::vector<Vertex> pick;
  std::function<void(Vertex)> gen = [&](Vertex from) {
    if (static_cast<int>(pick.size()) == k) {
      all_edges.push_back(pick);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      gen(v + 1);
      pick.pop_back();
    }
  };
  gen(0);
  std::set<std::vector<std::vector<Vertex>>> classes;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == m) {
      hyperrho::EdgeList edges;
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      for (std::size_t i : chosen) {
        edges.push_back(all_edges[i]);
        for (Vertex v : all_edges[i]) used[static_cast<std::size_t>(v)] = 1;
      }
      if (std::find(used.begin(), used.end(), 0) != used.end()) return;
      auto g = UniformHypergraph::build(k, n, edges);
      if (connected(g) && keep(g)) classes.insert(brute_canonical(g));
      return;
    }
    for (std::size_t i = from; i < all_edges.size(); ++i) {
      chosen.push_back(i);
      choose(i + 1);
      chosen.pop_back();
    }
  };
  choose(0);
  return classes;
}

}  // namespace oracle
