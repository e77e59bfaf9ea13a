#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrho/error.hpp"
#include "hyperrho/hypergraph.hpp"
#include "hyperrho/spectral.hpp"

namespace hyperrho {

// Isomorphism classes of k-uniform hypertrees with m edges; m <= 6, k <= 4.
// Throws ScaleExceeded, InvalidParams.
std::vector<UniformHypergraph> enumerate_hypertrees(int m, int k);
// Isomorphism classes of k-uniform hypercacti with m edges and exactly r
// cycles; m <= 4, k in {2, 3}.  Throws ScaleExceeded, InvalidParams.
std::vector<UniformHypergraph> enumerate_hypercacti(int m, int k, int r);

// Root rho > alpha m of (rho - alpha m)(rho - alpha)^(k-1) = (1-alpha)^k m.
double star_rho_oracle(int m, int k, double alpha);

enum class ConstraintKind { Hypertrees, Diameter, Pendant, Unicyclic, Hypercacti };

struct FamilyConstraint {
  ConstraintKind kind = ConstraintKind::Hypertrees;
  int m = 1;
  int k = 3;
  int param = 0;  // diameter d, pendant count t, or cycle count r
};
std::string describe(const FamilyConstraint& c);

struct ClassEntry {
  UniformHypergraph graph;
  std::vector<double> rho;  // one per grid alpha
};

struct AlphaVerdict {
  double alpha = 0.0;
  std::size_t winner = 0;  // index into classes
  double winner_rho = 0.0;
  double runner_up_rho = 0.0;  // equals winner_rho when there is a single class
  bool match = false;
  bool unique = false;
};

struct EnumerationReport {
  FamilyConstraint constraint;
  std::vector<double> alpha_grid;
  std::vector<ClassEntry> classes;  // sorted by .uhg serialization
  UniformHypergraph expected;
  std::vector<AlphaVerdict> verdicts;
  bool match = false;
  bool unique = false;
};

inline constexpr double kUniquenessMargin = 1e-9;
inline const std::vector<double> kDefaultAlphaGrid{0.0, 0.25, 0.5, 0.75};

class ExtremalMismatchError : public Error {
 public:
  ExtremalMismatchError(const std::string& what, EnumerationReport report)
      : Error(Errc::ExtremalMismatch, what), report_(std::move(report)) {}
  const EnumerationReport& report() const noexcept { return report_; }

 private:
  EnumerationReport report_;
};

// Candidate class for a constraint, filtered as described by `c`.
std::vector<UniformHypergraph> enumerate_constrained(const FamilyConstraint& c);
// The extremal family member expected for `c`.
UniformHypergraph expected_extremal(const FamilyConstraint& c);

// Throws ScaleExceeded, InvalidParams, ExtremalMismatchError.
EnumerationReport verify_extremal(const FamilyConstraint& c, const std::vector<double>& alpha_grid = kDefaultAlphaGrid,
                                  const SpectralOptions& opts = {});

struct ChainReport {
  double alpha;
  std::vector<double> rho;  // rho[i] belongs to d = i + 2
};
// Checks rho(S_{m,d,k}) < rho(S_{m,d-1,k}) for d = m down to 3.  Throws ChainViolation.
std::vector<ChainReport> verify_broom_chain(int m, int k, const std::vector<double>& alpha_grid,
                                            const SpectralOptions& opts = {});

// Connected k-uniform hypergraph with m edges; each new edge meets the
// current vertex set.  Deterministic in `seed`.
UniformHypergraph random_connected(int m, int k, std::uint64_t seed);

}  // namespace hyperrho
