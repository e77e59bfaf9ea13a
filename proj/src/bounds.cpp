#include "hyperrho/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperrho/error.hpp"

namespace hyperrho {

std::string_view bound_name(BoundName name) noexcept {
  switch (name) {
    case BoundName::MaxDegree: return "MaxDegree";
    case BoundName::DegreeRoot: return "DegreeRoot";
    case BoundName::DegreeRootWeak: return "DegreeRootWeak";
    case BoundName::PerronEdgeMass: return "PerronEdgeMass";
    case BoundName::PerronDegreeSum: return "PerronDegreeSum";
    case BoundName::IrregularDiameter: return "IrregularDiameter";
    case BoundName::PerronPeakDiameter: return "PerronPeakDiameter";
    case BoundName::PerronPeakAdjacent: return "PerronPeakAdjacent";
  }
  return "Unknown";
}

std::string_view equality_name(EqualityCase eq) noexcept {
  switch (eq) {
    case EqualityCase::Holds: return "Holds";
    case EqualityCase::FailsStrict: return "FailsStrict";
    case EqualityCase::NotCharacterized: return "NotCharacterized";
  }
  return "Unknown";
}

double delta_polynomial(double t, int max_deg, int second_max_deg, int k, Alpha alpha) {
  const double a = alpha.value();
  return (1.0 - a) * second_max_deg * std::pow(t, k) + a * (second_max_deg - max_deg) * std::pow(t, k - 1) -
         (1.0 - a) * max_deg;
}

double solve_delta(int max_deg, int second_max_deg, int k, Alpha alpha) {
  if (second_max_deg < 1 || max_deg < second_max_deg) {
    throw Error(Errc::InvalidDegrees, "need max degree >= second max degree >= 1 (got " + std::to_string(max_deg) +
                                          ", " + std::to_string(second_max_deg) + ")");
  }
  if (k < 2) throw Error(Errc::InvalidParams, "k must be at least 2");
  if (max_deg == second_max_deg) return 1.0;
  const double lower = std::pow(static_cast<double>(max_deg) / second_max_deg, 1.0 / k);
  if (alpha.value() == 0.0) return lower;

  // h(lower) < 0 for alpha > 0, h grows without bound, and h' changes sign at
  // most once on (0, inf), so the root above `lower` is unique.
  auto h = [&](double t) { return delta_polynomial(t, max_deg, second_max_deg, k, alpha); };
  double lo = lower;
  double hi = std::max(2.0 * lower, 2.0);
  while (h(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = h(mid);
    if (value == 0.0) return mid;
    (value < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool is_cone_over_regular(const UniformHypergraph& g) {
  if (g.m() == 0) return false;
  for (Vertex apex = 0; apex < g.n(); ++apex) {
    if (static_cast<std::size_t>(g.degree(apex)) != g.m()) continue;
    int common = -1;
    bool ok = true;
    for (Vertex v = 0; v < g.n() && ok; ++v) {
      if (v == apex) continue;
      if (common < 0) common = g.degree(v);
      ok = g.degree(v) == common;
    }
    if (ok) return true;
  }
  return false;
}

namespace {

double resolve_rho(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho, bool connected) {
  if (rho) return *rho;
  return connected ? spectral_radius(g, alpha).rho : 0.0;
}

void diagnose(BoundReport& r, bool connected, double rho, bool structural) {
  if (!connected) {
    r.equality_case = EqualityCase::NotCharacterized;
    r.diagnostic = "equality is characterized only for connected hypergraphs";
    return;
  }
  const double gap = r.value - rho;
  r.inputs["rho"] = rho;
  const bool tight = std::abs(gap) <= kEqualityGap;
  if (structural && tight) {
    r.equality_case = EqualityCase::Holds;
    return;
  }
  r.equality_case = EqualityCase::FailsStrict;
  std::ostringstream msg;
  if (structural) {
    msg << "structure matches the equality case but the numeric gap is " << gap;
  } else if (tight) {
    msg << "numeric gap " << gap << " is within tolerance but the structure does not match";
  } else {
    msg << "strict: bound exceeds rho by " << gap;
  }
  r.diagnostic = msg.str();
}

void require_edges(const UniformHypergraph& g) {
  if (g.m() == 0) throw Error(Errc::InvalidDegrees, "degree bounds need at least one edge");
}

}  // namespace

BoundReport bound_max_degree(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho) {
  require_edges(g);
  const bool connected = is_connected(g);
  BoundReport r{BoundName::MaxDegree};
  const int d1 = max_degree(g);
  r.value = d1;
  r.inputs = {{"Delta", d1}};
  diagnose(r, connected, resolve_rho(g, alpha, rho, connected), is_regular(g));
  return r;
}

BoundReport bound_degree_root(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho) {
  require_edges(g);
  const bool connected = is_connected(g);
  const int d1 = max_degree(g);
  const int d2 = second_max_degree(g);
  const int k = g.k();
  const double a = alpha.value();
  const double delta = solve_delta(d1, d2, k, alpha);
  BoundReport r{BoundName::DegreeRoot};
  r.value = a * d1 + (1.0 - a) * d1 * std::pow(delta, -(k - 1));
  r.inputs = {{"Delta", d1}, {"Delta2", d2}, {"delta", delta}, {"k", k}, {"alpha", a}};
  diagnose(r, connected, resolve_rho(g, alpha, rho, connected), is_regular(g) || is_cone_over_regular(g));
  return r;
}

BoundReport bound_degree_root_weak(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho) {
  require_edges(g);
  const bool connected = is_connected(g);
  const int d1 = max_degree(g);
  const int d2 = second_max_degree(g);
  const int k = g.k();
  const double a = alpha.value();
  BoundReport r{BoundName::DegreeRootWeak};
  r.value = a * d1 + (1.0 - a) * std::pow(d1, 1.0 / k) * std::pow(d2, 1.0 - 1.0 / k);
  r.inputs = {{"Delta", d1}, {"Delta2", d2}, {"k", k}, {"alpha", a}};
  diagnose(r, connected, resolve_rho(g, alpha, rho, connected), is_regular(g));
  return r;
}

namespace {

void require_certificate(const UniformHypergraph& g, Alpha alpha, const SpectralResult& res) {
  if (res.perron.size() != static_cast<std::size_t>(g.n())) {
    throw Error(Errc::StaleCertificate, "Perron vector length differs from n");
  }
  if (std::ranges::any_of(res.perron, [](double v) { return !(v > 0.0); })) {
    throw Error(Errc::StaleCertificate, "Perron vector must be positive");
  }
  const double residual = eigen_residual(g, alpha, res.rho, res.perron);
  if (residual > 1e-9) {
    std::ostringstream msg;
    msg << "eigen-residual " << residual << " exceeds 1e-9";
    throw Error(Errc::StaleCertificate, msg.str());
  }
}

}  // namespace

std::pair<BoundReport, BoundReport> perron_certificates(const UniformHypergraph& g, Alpha alpha,
                                                       const SpectralResult& res) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "Perron certificates need a connected hypergraph");
  require_certificate(g, alpha, res);
  const int k = g.k();
  const double a = alpha.value();
  const int d1 = max_degree(g);
  const double xmax = *std::max_element(res.perron.begin(), res.perron.end());
  double degree_power_sum = 0.0;
  for (int d : degrees(g)) degree_power_sum += std::pow(d, static_cast<double>(k) / (k - 1));
  const bool regular = is_regular(g);

  BoundReport first{BoundName::PerronEdgeMass};
  first.value = a * d1 + (1.0 - a) * k * static_cast<double>(g.m()) * std::pow(xmax, k);
  first.inputs = {{"Delta", d1}, {"k", k}, {"m", static_cast<double>(g.m())}, {"xmax", xmax}, {"alpha", a}};
  first.certificate = true;
  diagnose(first, true, res.rho, regular);

  BoundReport second{BoundName::PerronDegreeSum};
  second.value =
      a * d1 + (1.0 - a) * std::pow(degree_power_sum, static_cast<double>(k - 1) / k) * std::pow(xmax, k - 1);
  second.inputs = {{"Delta", d1}, {"k", k}, {"degree_power_sum", degree_power_sum}, {"xmax", xmax}, {"alpha", a}};
  second.certificate = true;
  diagnose(second, true, res.rho, regular);
  return {first, second};
}

double perron_peak_lower_bound(const UniformHypergraph& g, double rho0) {
  const int k = g.k();
  double degree_power_sum = 0.0;
  for (int d : degrees(g)) degree_power_sum += std::pow(d, static_cast<double>(k) / (k - 1));
  return std::pow(rho0, 1.0 / (k - 1)) / std::pow(degree_power_sum, 1.0 / k);
}

std::vector<BoundReport> bounds_irregular(const UniformHypergraph& g, Alpha alpha, const SpectralResult* res) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "irregular bounds need a connected hypergraph");
  if (is_regular(g)) throw Error(Errc::RegularInput, "bound is defined for irregular hypergraphs only");
  const int k = g.k();
  const int n = g.n();
  const double m = static_cast<double>(g.m());
  const double a = alpha.value();
  const int d1 = max_degree(g);
  const int diam = diameter(g);

  std::vector<BoundReport> out;
  BoundReport irregular{BoundName::IrregularDiameter};
  irregular.value = d1 - 4.0 * (1.0 - a) / (((4.0 * diam - 1.0 - 2.0 * a) * (k - 1) + 1.0) * n);
  irregular.inputs = {{"Delta", d1}, {"D", diam}, {"k", k}, {"n", n}, {"alpha", a}};
  if (res != nullptr) irregular.inputs["rho"] = res->rho;
  out.push_back(irregular);

  if (res == nullptr) return out;
  require_certificate(g, alpha, *res);
  const double xmax = *std::max_element(res->perron.begin(), res->perron.end());
  const double excess = n * d1 - k * m;  // n Delta - k m > 0 for irregular g

  BoundReport diam_bound{BoundName::PerronPeakDiameter};
  diam_bound.value = d1 - (1.0 - a) * k * excess / (2.0 * excess * (k - 1) * diam + (1.0 - a) * k) * std::pow(xmax, k);
  diam_bound.inputs = {{"Delta", d1}, {"D", diam}, {"k", k}, {"n", n}, {"m", m}, {"xmax", xmax}, {"alpha", a},
                       {"rho", res->rho}};
  diam_bound.certificate = true;
  out.push_back(diam_bound);

  if (diam == 1 && k >= 3) {
    BoundReport d1_bound{BoundName::PerronPeakAdjacent};
    d1_bound.value = d1 - (1.0 - a) * excess * n / (2.0 * excess * (k - 1) + (1.0 - a) * n) * std::pow(xmax, k);
    d1_bound.inputs = {{"Delta", d1}, {"k", k}, {"n", n}, {"m", m}, {"xmax", xmax}, {"alpha", a}, {"rho", res->rho}};
    d1_bound.certificate = true;
    out.push_back(d1_bound);
  }
  return out;
}

std::vector<BoundReport> all_bounds(const UniformHypergraph& g, Alpha alpha, const SpectralResult* res) {
  const bool connected = is_connected(g);
  std::optional<double> rho;
  if (connected && res != nullptr) rho = res->rho;
  std::vector<BoundReport> out{bound_max_degree(g, alpha, rho), bound_degree_root(g, alpha, rho),
                               bound_degree_root_weak(g, alpha, rho)};
  if (connected && res != nullptr) {
    auto [a, b] = perron_certificates(g, alpha, *res);
    out.push_back(a);
    out.push_back(b);
  }
  if (connected && !is_regular(g)) {
    for (auto& r : bounds_irregular(g, alpha, res)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hyperrho
