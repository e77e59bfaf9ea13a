#pragma once

#include <span>
#include <vector>

#include "hyperrho/hypergraph.hpp"
#include "hyperrho/kernels.hpp"

namespace hyperrho {

// Mixing parameter of A_alpha = alpha * D + (1 - alpha) * A, 0 <= alpha < 1.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

struct SpectralOptions {
  double tol = 1e-12;           // relative width of the Collatz-Wielandt bracket
  long max_iter = 1'000'000;
  double shift = 1.0;           // diagonal shift added to A_alpha during iteration
  double residual_tol = 1e-10;  // post-hoc infinity-norm residual required to stop
  const kernels::KernelTable* kernels = nullptr;  // nullptr: runtime-selected table
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;  // k-unit: sum of x_v^k is 1
  long iterations = 0;
  double residual_inf = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// Component v of A_alpha x: alpha d_v x_v^(k-1) + (1-alpha) sum over e containing
// v of the product of x over e \ {v}.  Throws DimensionMismatch, NegativeEntry.
std::vector<double> alpha_apply(const UniformHypergraph& g, Alpha alpha, std::span<const double> x,
                                const kernels::KernelTable* table = nullptr);

struct RayleighForms {
  double by_vertex;  // alpha sum_v d_v x_v^k + (1-alpha) k sum_e x_e
  double by_edge;    // sum_e (alpha sum_{u in e} x_u^k + (1-alpha) k x_e)
};
RayleighForms rayleigh_forms(const UniformHypergraph& g, Alpha alpha, std::span<const double> x);

// x^T (A_alpha x) for a k-unit non-negative x.  Both forms are evaluated and
// must agree to 1e-12.  Throws NotKUnit, NegativeEntry, DimensionMismatch.
double rayleigh(const UniformHypergraph& g, Alpha alpha, std::span<const double> x);

// Shifted power iteration on A_alpha + shift * I.  Throws Disconnected,
// NoConvergence, InvalidParams.
SpectralResult spectral_radius(const UniformHypergraph& g, Alpha alpha, const SpectralOptions& opts = {});

// || A_alpha x - rho x^[k-1] ||_inf
double eigen_residual(const UniformHypergraph& g, Alpha alpha, double rho, std::span<const double> x);

struct ComponentSpectrum {
  std::vector<Vertex> vertices;  // original vertex ids
  SpectralResult result;         // rho = 0 and perron = {1} for an isolated vertex
};
std::vector<ComponentSpectrum> component_spectra(const UniformHypergraph& g, Alpha alpha,
                                                 const SpectralOptions& opts = {});
// Largest component rho; equals spectral_radius(...).rho for connected input.
double spectral_radius_any(const UniformHypergraph& g, Alpha alpha, const SpectralOptions& opts = {});

}  // namespace hyperrho
