// AVX2 kernel variants.  Only the functions below are compiled for AVX2 (via
// the target attribute) so that no shared inline code picks up AVX2
// encodings; the table is only handed out after a runtime CPU check.
#include <immintrin.h>

#include <cmath>
#include <limits>

#include "hyperrho/kernels.hpp"

#define HYPERRHO_AVX2 __attribute__((target("avx2")))

namespace hyperrho::kernels::detail {
namespace {

constexpr int kMaxVectorK = 16;

HYPERRHO_AVX2 void avx2_edge_cofactors(const EdgeColumns& cols, std::span<const double> x, std::span<double> out) {
  const int k = cols.k;
  const std::size_t m = cols.m;
  if (k > kMaxVectorK) {
    scalar_edge_cofactors(cols, x, out);
    return;
  }
  const double* xp = x.data();
  const std::int32_t* ids = cols.ids.data();
  double* dst = out.data();
  __m256d gathered[kMaxVectorK];
  __m256d suffix[kMaxVectorK + 1];
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    for (int j = 0; j < k; ++j) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids + static_cast<std::size_t>(j) * m + e));
      gathered[j] = _mm256_i32gather_pd(xp, idx, 8);
    }
    suffix[k] = one;
    for (int j = k - 1; j >= 0; --j) suffix[j] = _mm256_mul_pd(gathered[j], suffix[j + 1]);
    __m256d prefix = one;
    for (int j = 0; j < k; ++j) {
      _mm256_storeu_pd(dst + static_cast<std::size_t>(j) * m + e, _mm256_mul_pd(prefix, suffix[j + 1]));
      prefix = _mm256_mul_pd(prefix, gathered[j]);
    }
  }
  // Tail edges: same multiplication order as the scalar reference.
  for (; e < m; ++e) {
    double g[kMaxVectorK]{};
    double s[kMaxVectorK + 1];
    for (int j = 0; j < k; ++j) g[j] = xp[ids[static_cast<std::size_t>(j) * m + e]];
    s[k] = 1.0;
    for (int j = k - 1; j >= 0; --j) s[j] = g[j] * s[j + 1];
    double prefix = 1.0;
    for (int j = 0; j < k; ++j) {
      dst[static_cast<std::size_t>(j) * m + e] = prefix * s[j + 1];
      prefix *= g[j];
    }
  }
}

HYPERRHO_AVX2 void avx2_ratio_bracket(std::span<const double> y, std::span<const double> x, int p, double& lo,
                                      double& hi) {
  const std::size_t n = x.size();
  __m256d vlo = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d vhi = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d xpow = xv;
    for (int r = 1; r < p; ++r) xpow = _mm256_mul_pd(xpow, xv);
    const __m256d ratio = _mm256_div_pd(_mm256_loadu_pd(y.data() + i), xpow);
    vlo = _mm256_min_pd(vlo, ratio);
    vhi = _mm256_max_pd(vhi, ratio);
  }
  alignas(32) double lanes_lo[4];
  alignas(32) double lanes_hi[4];
  _mm256_store_pd(lanes_lo, vlo);
  _mm256_store_pd(lanes_hi, vhi);
  double l = lanes_lo[0], h = lanes_hi[0];
  for (int j = 1; j < 4; ++j) {
    l = lanes_lo[j] < l ? lanes_lo[j] : l;
    h = lanes_hi[j] > h ? lanes_hi[j] : h;
  }
  for (; i < n; ++i) {
    double xpow = x[i];
    for (int r = 1; r < p; ++r) xpow *= x[i];
    const double ratio = y[i] / xpow;
    l = ratio < l ? ratio : l;
    h = ratio > h ? ratio : h;
  }
  lo = l;
  hi = h;
}

HYPERRHO_AVX2 double avx2_power_sum(std::span<const double> x, int p) {
  const std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d xpow = xv;
    for (int r = 1; r < p; ++r) xpow = _mm256_mul_pd(xpow, xv);
    acc = _mm256_add_pd(acc, xpow);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    double xpow = x[i];
    for (int r = 1; r < p; ++r) xpow *= x[i];
    sum += xpow;
  }
  return sum;
}

HYPERRHO_AVX2 void avx2_powi(std::span<const double> x, int p, std::span<double> out) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d xpow = xv;
    for (int r = 1; r < p; ++r) xpow = _mm256_mul_pd(xpow, xv);
    _mm256_storeu_pd(out.data() + i, xpow);
  }
  for (; i < n; ++i) {
    double xpow = x[i];
    for (int r = 1; r < p; ++r) xpow *= x[i];
    out[i] = xpow;
  }
}

HYPERRHO_AVX2 void avx2_root(std::span<const double> x, int p, std::span<double> out) {
  if (p != 2) {
    scalar_root(x, p, out);
    return;
  }
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out.data() + i, _mm256_sqrt_pd(_mm256_loadu_pd(x.data() + i)));
  for (; i < n; ++i) out[i] = std::sqrt(x[i]);
}

}  // namespace

const KernelTable* avx2_table_if_compiled() noexcept {
  static const KernelTable table{Isa::Avx2,     avx2_edge_cofactors, avx2_ratio_bracket,
                                 avx2_power_sum, avx2_powi,          avx2_root};
  return &table;
}

}  // namespace hyperrho::kernels::detail
