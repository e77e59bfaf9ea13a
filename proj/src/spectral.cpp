#include "hyperrho/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hyperrho/error.hpp"

namespace hyperrho {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value < 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in [0, 1), got " << value;
    throw Error(Errc::InvalidAlpha, msg.str());
  }
}

namespace {

void check_vector(const UniformHypergraph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.n())) {
    throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(x.size()) + " differs from n = " +
                                             std::to_string(g.n()));
  }
  for (double v : x) {
    if (!(v >= 0.0)) throw Error(Errc::NegativeEntry, "vector entries must be non-negative");
  }
}

// Per-solve scratch: the column view of the edges and, for every vertex, the
// cofactor slots (j * m + e) it accumulates from.
class TensorOperator {
 public:
  TensorOperator(const UniformHypergraph& g, Alpha alpha, const kernels::KernelTable& table)
      : g_(g), alpha_(alpha.value()), table_(table), cols_(kernels::make_columns(g)) {
    const auto n = static_cast<std::size_t>(g.n());
    const auto m = g.m();
    const auto k = static_cast<std::size_t>(g.k());
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      offsets_[v + 1] = offsets_[v] + static_cast<std::size_t>(g.degree(static_cast<Vertex>(v)));
      for (std::size_t slot : g.incident_slots(static_cast<Vertex>(v))) {
        cofactor_index_.push_back((slot % k) * m + slot / k);
      }
    }
    cofactors_.resize(k * m);
    powers_.resize(n);
  }

  // y = A_alpha x + shift * x^[k-1]
  void apply(std::span<const double> x, double shift, std::span<double> y) {
    table_.edge_cofactors(cols_, x, cofactors_);
    table_.powi(x, g_.k() - 1, powers_);
    for (std::size_t v = 0; v < powers_.size(); ++v) {
      double sum = 0.0;
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) sum += cofactors_[cofactor_index_[i]];
      const double degree = static_cast<double>(offsets_[v + 1] - offsets_[v]);
      y[v] = alpha_ * degree * powers_[v] + (1.0 - alpha_) * sum + shift * powers_[v];
    }
  }

  const kernels::KernelTable& table() const noexcept { return table_; }

 private:
  const UniformHypergraph& g_;
  double alpha_;
  const kernels::KernelTable& table_;
  kernels::EdgeColumns cols_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> cofactor_index_;
  std::vector<double> cofactors_;
  std::vector<double> powers_;
};

const kernels::KernelTable& pick(const kernels::KernelTable* table) {
  return table != nullptr ? *table : kernels::active();
}

}  // namespace

std::vector<double> alpha_apply(const UniformHypergraph& g, Alpha alpha, std::span<const double> x,
                                const kernels::KernelTable* table) {
  check_vector(g, x);
  TensorOperator op(g, alpha, pick(table));
  std::vector<double> y(x.size());
  op.apply(x, 0.0, y);
  return y;
}

RayleighForms rayleigh_forms(const UniformHypergraph& g, Alpha alpha, std::span<const double> x) {
  check_vector(g, x);
  const double a = alpha.value();
  const int k = g.k();
  auto kth = [k](double v) { return std::pow(v, k); };
  double vertex_part = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) vertex_part += g.degree(v) * kth(x[static_cast<std::size_t>(v)]);
  double edge_products = 0.0;
  double by_edge = 0.0;
  for (std::size_t e = 0; e < g.m(); ++e) {
    double product = 1.0;
    double powers = 0.0;
    for (Vertex v : g.edge(e)) {
      product *= x[static_cast<std::size_t>(v)];
      powers += kth(x[static_cast<std::size_t>(v)]);
    }
    edge_products += product;
    by_edge += a * powers + (1.0 - a) * k * product;
  }
  return {a * vertex_part + (1.0 - a) * k * edge_products, by_edge};
}

double rayleigh(const UniformHypergraph& g, Alpha alpha, std::span<const double> x) {
  check_vector(g, x);
  double norm = 0.0;
  for (double v : x) norm += std::pow(v, g.k());
  if (std::abs(norm - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "sum of x_v^k is " << norm << ", expected 1";
    throw Error(Errc::NotKUnit, msg.str());
  }
  const auto forms = rayleigh_forms(g, alpha, x);
  if (std::abs(forms.by_vertex - forms.by_edge) > 1e-12 * std::max(1.0, std::abs(forms.by_vertex))) {
    throw std::logic_error("Rayleigh quotient forms disagree");
  }
  return forms.by_vertex;
}

double eigen_residual(const UniformHypergraph& g, Alpha alpha, double rho, std::span<const double> x) {
  check_vector(g, x);
  // Plain loops rather than kernels: this is the independent convergence check.
  const double a = alpha.value();
  const int k = g.k();
  double worst = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const double xv = x[static_cast<std::size_t>(v)];
    const double xpow = std::pow(xv, k - 1);
    double sum = 0.0;
    for (std::size_t e : g.incident_edges(v)) {
      double product = 1.0;
      for (Vertex u : g.edge(e)) {
        if (u != v) product *= x[static_cast<std::size_t>(u)];
      }
      sum += product;
    }
    const double lhs = a * g.degree(v) * xpow + (1.0 - a) * sum;
    worst = std::max(worst, std::abs(lhs - rho * xpow));
  }
  return worst;
}

SpectralResult spectral_radius(const UniformHypergraph& g, Alpha alpha, const SpectralOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iter < 1 || !(opts.shift >= 0.0) || !(opts.residual_tol > 0.0)) {
    throw Error(Errc::InvalidParams, "spectral options need tol > 0, max_iter >= 1, shift >= 0, residual_tol > 0");
  }
  if (!is_connected(g)) {
    throw Error(Errc::Disconnected, "A_alpha is weakly irreducible only for connected hypergraphs");
  }
  const auto n = static_cast<std::size_t>(g.n());
  const int k = g.k();
  TensorOperator op(g, alpha, pick(opts.kernels));
  const auto& table = op.table();

  std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
  std::vector<double> y(n);
  SpectralResult result;
  for (long iter = 1; iter <= opts.max_iter; ++iter) {
    op.apply(x, opts.shift, y);
    double lo = 0.0, hi = 0.0;
    table.ratio_bracket(y, x, k - 1, lo, hi);
    if (hi - lo <= opts.tol * hi) {
      const double rho = 0.5 * (lo + hi) - opts.shift;
      const double residual = eigen_residual(g, alpha, rho, x);
      if (residual <= opts.residual_tol) {
        result.rho = rho;
        result.perron = x;
        result.iterations = iter;
        result.residual_inf = residual;
        result.bracket_lo = lo - opts.shift;
        result.bracket_hi = hi - opts.shift;
        return result;
      }
    }
    table.root(y, k - 1, x);
    const double scale = std::pow(table.power_sum(x, k), -1.0 / k);
    for (double& v : x) v *= scale;
  }
  std::ostringstream msg;
  msg << "no convergence within " << opts.max_iter << " iterations";
  throw Error(Errc::NoConvergence, msg.str());
}

std::vector<ComponentSpectrum> component_spectra(const UniformHypergraph& g, Alpha alpha,
                                                 const SpectralOptions& opts) {
  std::vector<ComponentSpectrum> out;
  for (auto& comp : components(g)) {
    ComponentSpectrum cs;
    cs.vertices = std::move(comp.vertices);
    if (comp.graph) {
      cs.result = spectral_radius(*comp.graph, alpha, opts);
    } else {
      cs.result.perron = {1.0};
    }
    out.push_back(std::move(cs));
  }
  return out;
}

double spectral_radius_any(const UniformHypergraph& g, Alpha alpha, const SpectralOptions& opts) {
  if (is_connected(g)) return spectral_radius(g, alpha, opts).rho;
  double best = 0.0;
  for (const auto& cs : component_spectra(g, alpha, opts)) best = std::max(best, cs.result.rho);
  return best;
}

}  // namespace hyperrho
