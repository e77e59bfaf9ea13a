#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperrho {

using Vertex = std::int32_t;
using EdgeList = std::vector<std::vector<Vertex>>;

// Immutable k-uniform hypergraph on vertices 0..n-1.
//
// Edges are stored as sorted k-tuples and the edge list itself is kept in
// lexicographic order, so two hypergraphs with the same edge set compare
// equal and serialize identically.  Edge indices used throughout the library
// refer to this sorted order.
class UniformHypergraph {
 public:
  // Validates and canonicalizes.  Throws Error{EdgeWrongSize, VertexOutOfRange,
  // DuplicateEdge, InvalidParams}.
  static UniformHypergraph build(int k, int n, EdgeList edges);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return k_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(k_); }

  std::span<const Vertex> edge(std::size_t index) const {
    return {flat_.data() + index * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  // Edge-major k*m array of vertex ids.
  std::span<const Vertex> flat_edges() const noexcept { return flat_; }

  std::span<const std::size_t> incident_edges(Vertex v) const {
    const auto b = inc_offsets_[static_cast<std::size_t>(v)];
    const auto e = inc_offsets_[static_cast<std::size_t>(v) + 1];
    return {inc_edges_.data() + b, e - b};
  }
  // Slot = edge * k + position of v inside that edge; same order as incident_edges.
  std::span<const std::size_t> incident_slots(Vertex v) const {
    const auto b = inc_offsets_[static_cast<std::size_t>(v)];
    const auto e = inc_offsets_[static_cast<std::size_t>(v) + 1];
    return {inc_slots_.data() + b, e - b};
  }
  int degree(Vertex v) const {
    return static_cast<int>(inc_offsets_[static_cast<std::size_t>(v) + 1] -
                            inc_offsets_[static_cast<std::size_t>(v)]);
  }

  // Index of the edge equal to the given vertex set (any order), if present.
  std::optional<std::size_t> find_edge(std::vector<Vertex> vertices) const;
  bool has_edge(std::vector<Vertex> vertices) const { return find_edge(std::move(vertices)).has_value(); }
  bool edge_contains(std::size_t index, Vertex v) const;

  EdgeList edge_list() const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  UniformHypergraph() = default;

  int k_ = 0;
  int n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> inc_offsets_;
  std::vector<std::size_t> inc_edges_;
  std::vector<std::size_t> inc_slots_;
};

std::vector<int> degrees(const UniformHypergraph& g);
int max_degree(const UniformHypergraph& g);
// Second entry of the degree sequence sorted non-increasingly (so it equals
// the maximum degree when two vertices attain it).
int second_max_degree(const UniformHypergraph& g);
bool is_regular(const UniformHypergraph& g);

bool is_connected(const UniformHypergraph& g);

struct Component {
  std::vector<Vertex> vertices;  // original ids, ascending
  // Relabelled sub-hypergraph; empty for an isolated vertex.
  std::optional<UniformHypergraph> graph;
};
std::vector<Component> components(const UniformHypergraph& g);

// Alternating vertex/edge sequence v0 e1 v1 ... es vs.
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edge_indices;
  std::size_t length() const noexcept { return edge_indices.size(); }
};

// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> distances_from(const UniformHypergraph& g, Vertex source);
int distance(const UniformHypergraph& g, Vertex u, Vertex v);
PathWitness shortest_path(const UniformHypergraph& g, Vertex u, Vertex v);
int diameter(const UniformHypergraph& g);

struct Classification {
  bool is_hypertree = false;
  int cycle_count = 0;  // cyclomatic number of the vertex-edge incidence graph
  bool is_hypercactus = false;
};
// Throws Error{Disconnected}.
Classification classify(const UniformHypergraph& g);

// Number of edges with exactly k-1 vertices of degree one.
int pendant_edge_count(const UniformHypergraph& g);

// Returns phi with phi[v] = image of v in `h`, if an isomorphism exists.
// Optional colour vectors restrict the mapping to colour-preserving ones.
std::optional<std::vector<Vertex>> find_isomorphism(const UniformHypergraph& g,
                                                    const UniformHypergraph& h,
                                                    std::span<const int> g_colours = {},
                                                    std::span<const int> h_colours = {});
bool isomorphic(const UniformHypergraph& g, const UniformHypergraph& h);
// True iff some automorphism maps u to v.
bool same_orbit(const UniformHypergraph& g, Vertex u, Vertex v);
// True iff some automorphism maps the vertex set `from` onto `to`.
bool sets_in_same_orbit(const UniformHypergraph& g, std::span<const Vertex> from,
                        std::span<const Vertex> to);
// Vertex orbits under the automorphism group, each sorted, ordered by first vertex.
std::vector<std::vector<Vertex>> vertex_orbits(const UniformHypergraph& g);

// Applies v -> perm[v].
UniformHypergraph relabel(const UniformHypergraph& g, std::span<const Vertex> perm);

// Isomorphism-invariant fingerprint: equal for isomorphic inputs.
std::uint64_t invariant_hash(const UniformHypergraph& g);

// .uhg text format: "k n m" header, then m lines of k vertex ids, '#' comments.
UniformHypergraph parse_uhg(std::string_view text);
std::string serialize_uhg(const UniformHypergraph& g);
UniformHypergraph read_uhg_file(const std::string& path);

}  // namespace hyperrho
