#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperrho/hypergraph.hpp"
#include "hyperrho/spectral.hpp"

namespace hyperrho {

// Rewirings that increase the alpha-spectral radius.  Constructors never
// relabel vertices, so Perron entries before and after compare by index, and
// they refuse to create an edge that already exists.

struct EdgeMove {
  std::size_t edge;  // index into g's sorted edge list
  Vertex from;       // vertex of `edge` that is replaced by the target
};

struct TransformOutcome {
  UniformHypergraph result;
  std::map<std::string, double> evidence;
  double rho_before = 0.0;
  double rho_after = 0.0;
  bool strict_increase = false;
  // The hypothesis that guarantees an increase was machine-verified (by a
  // margin above kHypothesisMargin, or exactly through an automorphism), so
  // strict_increase was asserted.
  bool hypothesis_verified = false;
};

inline constexpr double kHypothesisMargin = 1e-9;
inline constexpr double kIncreaseMargin = 1e-10;

// Replaces each moves[i].edge by (edge \ {from}) + {u}.  Throws VertexInEdge,
// VertexNotInEdge, EdgeCollision, InvalidParams.
UniformHypergraph move_edges(const UniformHypergraph& g, Vertex u, std::span<const EdgeMove> moves);
// Asserts an increase when x_u >= max x_from is verified.  Throws
// Disconnected, MonotonicityViolation, plus move_edges errors.
TransformOutcome check_move_increase(const UniformHypergraph& g, Alpha alpha, Vertex u,
                                     std::span<const EdgeMove> moves, const SpectralOptions& opts = {});

// Replaces disjoint edges e, f by U + (f \ V) and V + (e \ U).  Throws
// OverlappingEdges, SizeMismatch, VertexNotInEdge, EdgeCollision.
UniformHypergraph switch_edges(const UniformHypergraph& g, std::size_t e, std::size_t f,
                               std::span<const Vertex> U, std::span<const Vertex> V);
// Asserts an increase when x_U >= x_V and x_{e\U} <= x_{f\V} with one strict.
TransformOutcome check_switch_increase(const UniformHypergraph& g, Alpha alpha, std::size_t e, std::size_t f,
                                       std::span<const Vertex> U, std::span<const Vertex> V,
                                       const SpectralOptions& opts = {});

// G_u(s): a pendant loose path of length s at u on s(k-1) fresh vertices.
UniformHypergraph attach_path(const UniformHypergraph& g, Vertex u, int s);
// G_u(p, q) = (G_u(p))_u(q), p >= q >= 0.
UniformHypergraph graft(const UniformHypergraph& g, Vertex u, int p, int q);
// Compares G_u(p, q) (after) against G_u(p+1, q-1) (before); p >= q >= 1.
// Throws InvalidParams, Disconnected, MonotonicityViolation.
TransformOutcome check_graft_compare(const UniformHypergraph& g, Alpha alpha, Vertex u, int p, int q,
                                     const SpectralOptions& opts = {});

// For e = {keep, stay, ...} with at least three vertices of degree >= 2:
// every other edge that contains one of the remaining degree >= 2 vertices of
// e but not `keep` is re-homed onto `keep` (once, replacing its smallest such
// vertex).  `stay` defaults to the smallest qualifying vertex.  Throws
// DegreePatternViolated, VertexNotInEdge, EdgeCollision.
UniformHypergraph consolidate_branches(const UniformHypergraph& g, std::size_t e, Vertex keep,
                                       std::optional<Vertex> stay = std::nullopt);
TransformOutcome check_consolidate_increase(const UniformHypergraph& g, Alpha alpha, std::size_t e, Vertex keep,
                                            std::optional<Vertex> stay = std::nullopt,
                                            const SpectralOptions& opts = {});

}  // namespace hyperrho
