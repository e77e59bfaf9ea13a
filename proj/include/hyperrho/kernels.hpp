#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hyperrho/hypergraph.hpp"

// Data-parallel inner loops of the tensor power iteration.  Every kernel has
// a scalar reference implementation; wider variants are compiled separately
// and picked at runtime.  Kernels that only multiply, divide, compare or take
// square roots are bitwise identical across variants; power_sum may differ in
// the last bits because lanes are reduced in a different order.
namespace hyperrho::kernels {

enum class Isa { Scalar, Avx2 };
std::string_view isa_name(Isa isa) noexcept;

// Column (structure-of-arrays) view of the edge list: ids[j * m + e] is the
// j-th vertex of edge e.
struct EdgeColumns {
  int k = 0;
  std::size_t m = 0;
  std::vector<std::int32_t> ids;
};
EdgeColumns make_columns(const UniformHypergraph& g);

struct KernelTable {
  Isa isa;
  // out[j * m + e] = product of x over the vertices of e except column j.
  void (*edge_cofactors)(const EdgeColumns& cols, std::span<const double> x, std::span<double> out);
  // lo / hi = min / max over i of y[i] / x[i]^p.
  void (*ratio_bracket)(std::span<const double> y, std::span<const double> x, int p, double& lo, double& hi);
  // sum over i of x[i]^p.
  double (*power_sum)(std::span<const double> x, int p);
  // out[i] = x[i]^p for integer p >= 1 (repeated multiplication).
  void (*powi)(std::span<const double> x, int p, std::span<double> out);
  // out[i] = x[i]^(1/p), real non-negative root.
  void (*root)(std::span<const double> x, int p, std::span<double> out);
};

const KernelTable& scalar_table() noexcept;
// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table() noexcept;

// Table used by the spectral engine: the widest supported variant, unless the
// HYPERRHO_ISA environment variable is set to "scalar".
const KernelTable& active() noexcept;

namespace detail {
void scalar_edge_cofactors(const EdgeColumns& cols, std::span<const double> x, std::span<double> out);
void scalar_ratio_bracket(std::span<const double> y, std::span<const double> x, int p, double& lo, double& hi);
double scalar_power_sum(std::span<const double> x, int p);
void scalar_powi(std::span<const double> x, int p, std::span<double> out);
void scalar_root(std::span<const double> x, int p, std::span<double> out);
const KernelTable* avx2_table_if_compiled() noexcept;
}  // namespace detail

}  // namespace hyperrho::kernels
