#include "hyperrho/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "hyperrho/error.hpp"

namespace hyperrho {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EdgeWrongSize: return "EdgeWrongSize";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotKUnit: return "NotKUnit";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InvalidDegrees: return "InvalidDegrees";
    case Errc::StaleCertificate: return "StaleCertificate";
    case Errc::RegularInput: return "RegularInput";
    case Errc::VertexInEdge: return "VertexInEdge";
    case Errc::VertexNotInEdge: return "VertexNotInEdge";
    case Errc::EdgeCollision: return "EdgeCollision";
    case Errc::OverlappingEdges: return "OverlappingEdges";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::DegreePatternViolated: return "DegreePatternViolated";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::ExtremalMismatch: return "ExtremalMismatch";
    case Errc::ChainViolation: return "ChainViolation";
  }
  return "Unknown";
}

UniformHypergraph UniformHypergraph::build(int k, int n, EdgeList edges) {
  if (k < 2) throw Error(Errc::InvalidParams, "k must be at least 2, got " + std::to_string(k));
  if (n < k) {
    throw Error(Errc::InvalidParams,
                "n must be at least k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    std::sort(e.begin(), e.end());
    if (e.size() != static_cast<std::size_t>(k) || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(Errc::EdgeWrongSize, "edge " + std::to_string(i) + " does not have " +
                                           std::to_string(k) + " distinct vertices");
    }
    if (e.front() < 0 || e.back() >= n) {
      throw Error(Errc::VertexOutOfRange, "edge " + std::to_string(i) + " has a vertex outside 0.." +
                                              std::to_string(n - 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    std::string s;
    for (Vertex v : *dup) s += (s.empty() ? "" : " ") + std::to_string(v);
    throw Error(Errc::DuplicateEdge, "edge {" + s + "} appears twice");
  }

  UniformHypergraph g;
  g.k_ = k;
  g.n_ = n;
  g.flat_.reserve(edges.size() * static_cast<std::size_t>(k));
  for (const auto& e : edges) g.flat_.insert(g.flat_.end(), e.begin(), e.end());

  g.inc_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : g.flat_) ++g.inc_offsets_[static_cast<std::size_t>(v) + 1];
  std::partial_sum(g.inc_offsets_.begin(), g.inc_offsets_.end(), g.inc_offsets_.begin());
  g.inc_edges_.resize(g.flat_.size());
  g.inc_slots_.resize(g.flat_.size());
  std::vector<std::size_t> cursor(g.inc_offsets_.begin(), g.inc_offsets_.end() - 1);
  for (std::size_t slot = 0; slot < g.flat_.size(); ++slot) {
    auto& c = cursor[static_cast<std::size_t>(g.flat_[slot])];
    g.inc_edges_[c] = slot / static_cast<std::size_t>(k);
    g.inc_slots_[c] = slot;
    ++c;
  }
  return g;
}

std::optional<std::size_t> UniformHypergraph::find_edge(std::vector<Vertex> vertices) const {
  if (vertices.size() != static_cast<std::size_t>(k_)) return std::nullopt;
  std::sort(vertices.begin(), vertices.end());
  std::size_t lo = 0, hi = m();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), vertices.begin(), vertices.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < m() && std::ranges::equal(edge(lo), vertices)) return lo;
  return std::nullopt;
}

bool UniformHypergraph::edge_contains(std::size_t index, Vertex v) const {
  auto e = edge(index);
  return std::binary_search(e.begin(), e.end(), v);
}

EdgeList UniformHypergraph::edge_list() const {
  EdgeList out;
  out.reserve(m());
  for (std::size_t i = 0; i < m(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::vector<int> degrees(const UniformHypergraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return d;
}

int max_degree(const UniformHypergraph& g) {
  auto d = degrees(g);
  return *std::max_element(d.begin(), d.end());
}

int second_max_degree(const UniformHypergraph& g) {
  auto d = degrees(g);
  std::nth_element(d.begin(), d.begin() + 1, d.end(), std::greater<>());
  return d[1];
}

bool is_regular(const UniformHypergraph& g) {
  auto d = degrees(g);
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

std::vector<int> distances_from(const UniformHypergraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> edge_seen(g.m(), 0);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (std::size_t e : g.incident_edges(v)) {
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      for (Vertex w : g.edge(e)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push(w);
        }
      }
    }
  }
  return dist;
}

bool is_connected(const UniformHypergraph& g) {
  auto dist = distances_from(g, 0);
  return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

std::vector<Component> components(const UniformHypergraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<Component> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    Component comp;
    auto dist = distances_from(g, s);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (dist[static_cast<std::size_t>(v)] >= 0) {
        label[static_cast<std::size_t>(v)] = id;
        comp.vertices.push_back(v);
      }
    }
    if (comp.vertices.size() > 1) {
      std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
      for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
        local[static_cast<std::size_t>(comp.vertices[i])] = static_cast<Vertex>(i);
      }
      EdgeList edges;
      for (std::size_t e = 0; e < g.m(); ++e) {
        auto ev = g.edge(e);
        if (local[static_cast<std::size_t>(ev[0])] < 0) continue;
        std::vector<Vertex> mapped;
        for (Vertex v : ev) mapped.push_back(local[static_cast<std::size_t>(v)]);
        edges.push_back(std::move(mapped));
      }
      comp.graph = UniformHypergraph::build(g.k(), static_cast<int>(comp.vertices.size()), std::move(edges));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

int distance(const UniformHypergraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw Error(Errc::VertexOutOfRange, "distance query outside the vertex range");
  }
  const int d = distances_from(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) throw Error(Errc::Disconnected, "no path between the two vertices");
  return d;
}

PathWitness shortest_path(const UniformHypergraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw Error(Errc::VertexOutOfRange, "path query outside the vertex range");
  }
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> via(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  seen[static_cast<std::size_t>(u)] = 1;
  queue.push(u);
  while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
    const Vertex x = queue.front();
    queue.pop();
    for (std::size_t e : g.incident_edges(x)) {
      for (Vertex w : g.edge(e)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = x;
        via[static_cast<std::size_t>(w)] = e;
        queue.push(w);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(v)]) throw Error(Errc::Disconnected, "no path between the two vertices");
  PathWitness path;
  for (Vertex x = v; x != u; x = parent[static_cast<std::size_t>(x)]) {
    path.vertices.push_back(x);
    path.edge_indices.push_back(via[static_cast<std::size_t>(x)]);
  }
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edge_indices.begin(), path.edge_indices.end());
  return path;
}

int diameter(const UniformHypergraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int d : distances_from(g, v)) {
      if (d < 0) throw Error(Errc::Disconnected, "diameter of a disconnected hypergraph");
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

// Biconnected components of the bipartite vertex-edge incidence graph.  Node
// ids: hypergraph vertices are 0..n-1, edge e is n+e.  Each block is reported
// as its node set and its number of incidence links.
struct Block {
  std::vector<int> nodes;
  std::size_t links = 0;
};

std::vector<Block> incidence_blocks(const UniformHypergraph& g) {
  const int n = g.n();
  const int total = n + static_cast<int>(g.m());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (std::size_t e = 0; e < g.m(); ++e) {
    for (Vertex v : g.edge(e)) {
      adj[static_cast<std::size_t>(v)].push_back(n + static_cast<int>(e));
      adj[static_cast<std::size_t>(n) + e].push_back(v);
    }
  }
  std::vector<int> disc(static_cast<std::size_t>(total), -1), low(static_cast<std::size_t>(total), 0);
  std::vector<std::pair<int, int>> link_stack;
  std::vector<Block> blocks;
  int timer = 0;

  struct Frame {
    int node;
    int parent;
    std::size_t next;
  };
  for (int root = 0; root < total; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = adj[static_cast<std::size_t>(f.node)];
      if (f.next < nbrs.size()) {
        const int w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          link_stack.emplace_back(f.node, w);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.node, 0});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.node)]) {
          link_stack.emplace_back(f.node, w);
          low[static_cast<std::size_t>(f.node)] =
              std::min(low[static_cast<std::size_t>(f.node)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int child = f.node;
      const int parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[static_cast<std::size_t>(parent)] =
          std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(child)]);
      if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(parent)]) {
        Block block;
        while (true) {
          auto [a, b] = link_stack.back();
          link_stack.pop_back();
          block.nodes.push_back(a);
          block.nodes.push_back(b);
          ++block.links;
          if (a == parent && b == child) break;
        }
        std::sort(block.nodes.begin(), block.nodes.end());
        block.nodes.erase(std::unique(block.nodes.begin(), block.nodes.end()), block.nodes.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace

Classification classify(const UniformHypergraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "classify requires a connected hypergraph");
  Classification c;
  const long links = static_cast<long>(g.m()) * g.k();
  const long nodes = static_cast<long>(g.n()) + static_cast<long>(g.m());
  c.cycle_count = static_cast<int>(links - nodes + 1);
  c.is_hypertree = c.cycle_count == 0;

  // A hypercactus is a connected hypergraph whose incidence graph has only
  // bridges and simple cycles as blocks, with no hyperedge on two cycles
  // (two cycles through a common hyperedge share all k of its vertices).
  bool cactus = true;
  std::vector<int> cycles_through_edge(g.m(), 0);
  for (const Block& b : incidence_blocks(g)) {
    if (b.links == 1) continue;
    if (b.links != b.nodes.size()) {
      cactus = false;
      break;
    }
    for (int node : b.nodes) {
      if (node >= g.n() && ++cycles_through_edge[static_cast<std::size_t>(node - g.n())] > 1) cactus = false;
    }
  }
  c.is_hypercactus = cactus;
  return c;
}

int pendant_edge_count(const UniformHypergraph& g) {
  int count = 0;
  for (std::size_t e = 0; e < g.m(); ++e) {
    int ones = 0;
    for (Vertex v : g.edge(e)) ones += g.degree(v) == 1;
    count += ones == g.k() - 1;
  }
  return count;
}

UniformHypergraph relabel(const UniformHypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) {
    throw Error(Errc::DimensionMismatch, "permutation length differs from vertex count");
  }
  EdgeList edges = g.edge_list();
  for (auto& e : edges) {
    for (auto& v : e) v = perm[static_cast<std::size_t>(v)];
  }
  return UniformHypergraph::build(g.k(), g.n(), std::move(edges));
}

}  // namespace hyperrho
