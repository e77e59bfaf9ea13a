#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperrho/hypergraph.hpp"
#include "hyperrho/spectral.hpp"

namespace hyperrho {

enum class BoundName { MaxDegree, DegreeRoot, DegreeRootWeak, PerronEdgeMass, PerronDegreeSum, IrregularDiameter, PerronPeakDiameter, PerronPeakAdjacent };
enum class EqualityCase { Holds, FailsStrict, NotCharacterized };

std::string_view bound_name(BoundName name) noexcept;
std::string_view equality_name(EqualityCase eq) noexcept;

struct BoundReport {
  BoundName name;
  double value = 0.0;
  std::map<std::string, double> inputs;
  EqualityCase equality_case = EqualityCase::NotCharacterized;
  bool certificate = false;  // true when the value depends on the Perron vector
  std::string diagnostic;    // why a numeric tie was not reported as equality, etc.
};

// Numeric gap within which a bound is considered attained.
inline constexpr double kEqualityGap = 1e-8;

// Root of h(t) = (1-alpha) D2 t^k + alpha (D2 - D1) t^(k-1) - (1-alpha) D1 above
// (D1/D2)^(1/k); 1 when D1 == D2.  Throws InvalidDegrees.
double solve_delta(int max_deg, int second_max_deg, int k, Alpha alpha);
double delta_polynomial(double t, int max_deg, int second_max_deg, int k, Alpha alpha);

// True iff some vertex lies in every edge and all other vertices share one
// degree, i.e. g is a vertex joined to a regular (k-1)-uniform hypergraph.
bool is_cone_over_regular(const UniformHypergraph& g);

// The `rho` argument feeds the equality diagnosis.  When absent and g is
// connected it is computed; for disconnected g equality is NotCharacterized.
BoundReport bound_max_degree(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho = std::nullopt);
BoundReport bound_degree_root(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho = std::nullopt);
BoundReport bound_degree_root_weak(const UniformHypergraph& g, Alpha alpha, std::optional<double> rho = std::nullopt);

// Two Perron-vector certificate bounds.  Throws StaleCertificate when `res`
// does not satisfy the eigenequation for (g, alpha) to 1e-9, Disconnected.
std::pair<BoundReport, BoundReport> perron_certificates(const UniformHypergraph& g, Alpha alpha,
                                                       const SpectralResult& res);

// Lower bound on the largest Perron entry obtained by rearranging the second
// certificate bound at alpha = 0: rho0^(1/(k-1)) / (sum d^(k/(k-1)))^(1/k).
double perron_peak_lower_bound(const UniformHypergraph& g, double rho0);

// Bounds for connected irregular hypergraphs: the diameter bound and, when a
// converged result is given, the largest-Perron-entry bounds (the D = 1
// variant only for k >= 3).  Throws RegularInput, Disconnected.
std::vector<BoundReport> bounds_irregular(const UniformHypergraph& g, Alpha alpha, const SpectralResult* res = nullptr);

// Every bound applicable to g, using `res` (must be for g, alpha) when g is
// connected.
std::vector<BoundReport> all_bounds(const UniformHypergraph& g, Alpha alpha, const SpectralResult* res);

}  // namespace hyperrho
