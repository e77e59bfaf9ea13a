#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "hyperrho/kernels.hpp"

namespace hyperrho::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

EdgeColumns make_columns(const UniformHypergraph& g) {
  EdgeColumns cols;
  cols.k = g.k();
  cols.m = g.m();
  cols.ids.resize(static_cast<std::size_t>(cols.k) * cols.m);
  for (std::size_t e = 0; e < cols.m; ++e) {
    auto ev = g.edge(e);
    for (int j = 0; j < cols.k; ++j) cols.ids[static_cast<std::size_t>(j) * cols.m + e] = ev[static_cast<std::size_t>(j)];
  }
  return cols;
}

namespace detail {

// Prefix/suffix products, so zero entries need no special casing.  The order
// of multiplications is fixed; vector variants must reproduce it exactly.
void scalar_edge_cofactors(const EdgeColumns& cols, std::span<const double> x, std::span<double> out) {
  const int k = cols.k;
  const std::size_t m = cols.m;
  std::vector<double> gathered(static_cast<std::size_t>(k)), suffix(static_cast<std::size_t>(k) + 1);
  for (std::size_t e = 0; e < m; ++e) {
    for (int j = 0; j < k; ++j) {
      gathered[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(cols.ids[static_cast<std::size_t>(j) * m + e])];
    }
    suffix[static_cast<std::size_t>(k)] = 1.0;
    for (int j = k - 1; j >= 0; --j) {
      suffix[static_cast<std::size_t>(j)] = gathered[static_cast<std::size_t>(j)] * suffix[static_cast<std::size_t>(j) + 1];
    }
    double prefix = 1.0;
    for (int j = 0; j < k; ++j) {
      out[static_cast<std::size_t>(j) * m + e] = prefix * suffix[static_cast<std::size_t>(j) + 1];
      prefix *= gathered[static_cast<std::size_t>(j)];
    }
  }
}

void scalar_ratio_bracket(std::span<const double> y, std::span<const double> x, int p, double& lo, double& hi) {
  lo = std::numeric_limits<double>::infinity();
  hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    double xp = x[i];
    for (int r = 1; r < p; ++r) xp *= x[i];
    const double ratio = y[i] / xp;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
}

double scalar_power_sum(std::span<const double> x, int p) {
  double sum = 0.0;
  for (double v : x) {
    double vp = v;
    for (int r = 1; r < p; ++r) vp *= v;
    sum += vp;
  }
  return sum;
}

void scalar_powi(std::span<const double> x, int p, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    double vp = x[i];
    for (int r = 1; r < p; ++r) vp *= x[i];
    out[i] = vp;
  }
}

void scalar_root(std::span<const double> x, int p, std::span<double> out) {
  if (p == 1) {
    std::copy(x.begin(), x.end(), out.begin());
  } else if (p == 2) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::sqrt(x[i]);
  } else {
    const double inv = 1.0 / p;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], inv);
  }
}

#ifndef HYPERRHO_HAVE_AVX2
const KernelTable* avx2_table_if_compiled() noexcept { return nullptr; }
#endif

}  // namespace detail

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar,          detail::scalar_edge_cofactors, detail::scalar_ratio_bracket,
                                 detail::scalar_power_sum, detail::scalar_powi,       detail::scalar_root};
  return table;
}

const KernelTable* avx2_table() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? detail::avx2_table_if_compiled() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("HYPERRHO_ISA");
    if (env != nullptr && std::string(env) == "scalar") return &scalar_table();
    if (const auto* avx2 = avx2_table()) return avx2;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace hyperrho::kernels
