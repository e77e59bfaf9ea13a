#include "hyperrho/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "hyperrho/families.hpp"

namespace hyperrho {
namespace {

// Keeps one representative per isomorphism class.
class ClassSet {
 public:
  bool insert(UniformHypergraph g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (std::size_t i : bucket) {
      if (isomorphic(items_[i], g)) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(std::move(g));
    return true;
  }

  std::vector<UniformHypergraph> take_sorted() {
    std::vector<std::pair<std::string, std::size_t>> keys;
    for (std::size_t i = 0; i < items_.size(); ++i) keys.emplace_back(serialize_uhg(items_[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<UniformHypergraph> out;
    for (const auto& [key, i] : keys) out.push_back(std::move(items_[i]));
    return out;
  }

 private:
  std::map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<UniformHypergraph> items_;
};

UniformHypergraph single_edge(int k) {
  std::vector<Vertex> e(static_cast<std::size_t>(k));
  std::iota(e.begin(), e.end(), 0);
  return UniformHypergraph::build(k, k, {e});
}

void for_each_subset(int n, int size, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> pick;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (static_cast<int>(pick.size()) == size) {
      fn(pick);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

void require_basic(int m, int k) {
  if (m < 1 || k < 2) throw Error(Errc::InvalidParams, "need m >= 1 and k >= 2");
}

}  // namespace

std::vector<UniformHypergraph> enumerate_hypertrees(int m, int k) {
  require_basic(m, k);
  if (m > 6 || k > 4) throw Error(Errc::ScaleExceeded, "hypertree enumeration is limited to m <= 6, k <= 4");
  std::vector<UniformHypergraph> level{single_edge(k)};
  for (int size = 2; size <= m; ++size) {
    ClassSet next;
    for (const auto& g : level) {
      for (const auto& orbit : vertex_orbits(g)) {
        EdgeList edges = g.edge_list();
        std::vector<Vertex> e{orbit.front()};
        for (int i = 1; i < k; ++i) e.push_back(g.n() + i - 1);
        edges.push_back(std::move(e));
        next.insert(UniformHypergraph::build(k, g.n() + k - 1, std::move(edges)));
      }
    }
    level = next.take_sorted();
  }
  return level;
}

std::vector<UniformHypergraph> enumerate_hypercacti(int m, int k, int r) {
  require_basic(m, k);
  if (r < 0) throw Error(Errc::InvalidParams, "cycle count must be non-negative");
  if (m > 4 || k > 3) throw Error(Errc::ScaleExceeded, "hypercactus enumeration is limited to m <= 4, k <= 3");
  // Deleting a suitable edge of a hypercactus leaves a connected hypercactus
  // with no more cycles, so growing one edge at a time reaches every class.
  std::vector<UniformHypergraph> level{single_edge(k)};
  for (int size = 2; size <= m; ++size) {
    ClassSet next;
    for (const auto& g : level) {
      for (int shared = 1; shared <= std::min(k, g.n()); ++shared) {
        for_each_subset(g.n(), shared, [&](const std::vector<Vertex>& pick) {
          std::vector<Vertex> e = pick;
          for (int i = 0; i < k - shared; ++i) e.push_back(g.n() + i);
          if (shared == k && g.has_edge(e)) return;
          EdgeList edges = g.edge_list();
          edges.push_back(std::move(e));
          auto h = UniformHypergraph::build(k, g.n() + k - shared, std::move(edges));
          const auto c = classify(h);
          if (c.is_hypercactus && c.cycle_count <= r) next.insert(std::move(h));
        });
      }
    }
    level = next.take_sorted();
  }
  std::erase_if(level, [r](const UniformHypergraph& g) { return classify(g).cycle_count != r; });
  return level;
}

double star_rho_oracle(int m, int k, double alpha) {
  require_basic(m, k);
  const double a = Alpha(alpha).value();
  if (a == 0.0) return std::pow(static_cast<double>(m), 1.0 / k);
  const double rhs = std::pow(1.0 - a, k) * m;
  auto f = [&](double rho) { return (rho - a * m) * std::pow(rho - a, k - 1) - rhs; };
  double lo = std::max(a * m, a);
  double hi = m;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string describe(const FamilyConstraint& c) {
  std::ostringstream s;
  switch (c.kind) {
    case ConstraintKind::Hypertrees: s << "hypertrees"; break;
    case ConstraintKind::Diameter: s << "hypertrees"; break;
    case ConstraintKind::Pendant: s << "hypertrees"; break;
    case ConstraintKind::Unicyclic: s << "unicyclic"; break;
    case ConstraintKind::Hypercacti: s << "hypercacti"; break;
  }
  s << " m=" << c.m << " k=" << c.k;
  if (c.kind == ConstraintKind::Diameter) s << " diameter=" << c.param;
  if (c.kind == ConstraintKind::Pendant) s << " pendant=" << c.param;
  if (c.kind == ConstraintKind::Hypercacti) s << " r=" << c.param;
  return s.str();
}

std::vector<UniformHypergraph> enumerate_constrained(const FamilyConstraint& c) {
  switch (c.kind) {
    case ConstraintKind::Hypertrees: return enumerate_hypertrees(c.m, c.k);
    case ConstraintKind::Diameter: {
      auto all = enumerate_hypertrees(c.m, c.k);
      std::erase_if(all, [&](const UniformHypergraph& g) { return diameter(g) != c.param; });
      return all;
    }
    case ConstraintKind::Pendant: {
      auto all = enumerate_hypertrees(c.m, c.k);
      std::erase_if(all, [&](const UniformHypergraph& g) { return pendant_edge_count(g) != c.param; });
      return all;
    }
    case ConstraintKind::Unicyclic: return enumerate_hypercacti(c.m, c.k, 1);
    case ConstraintKind::Hypercacti: return enumerate_hypercacti(c.m, c.k, c.param);
  }
  throw Error(Errc::InvalidParams, "unknown constraint");
}

UniformHypergraph expected_extremal(const FamilyConstraint& c) {
  switch (c.kind) {
    case ConstraintKind::Hypertrees: return families::hyperstar(c.m, c.k);
    case ConstraintKind::Diameter:
      if (c.m == 1 && c.param == 1) return families::hyperstar(1, c.k);
      return families::broom_S(c.m, c.param, c.k);
    case ConstraintKind::Pendant: return families::spider_T(c.m, c.param, c.k);
    case ConstraintKind::Unicyclic: return families::cactus_H(c.m, 1, c.k);
    case ConstraintKind::Hypercacti: return families::cactus_H(c.m, c.param, c.k);
  }
  throw Error(Errc::InvalidParams, "unknown constraint");
}

EnumerationReport verify_extremal(const FamilyConstraint& c, const std::vector<double>& alpha_grid,
                                  const SpectralOptions& opts) {
  if (alpha_grid.empty()) throw Error(Errc::InvalidParams, "alpha grid is empty");
  std::vector<Alpha> alphas;
  for (double a : alpha_grid) alphas.emplace_back(a);
  auto expected = expected_extremal(c);
  auto candidates = enumerate_constrained(c);
  if (candidates.empty()) throw Error(Errc::InvalidParams, "no hypergraph satisfies " + describe(c));

  EnumerationReport report{c, alpha_grid, {}, std::move(expected)};
  std::optional<std::size_t> expected_index;
  for (auto& g : candidates) {
    if (!expected_index && isomorphic(g, report.expected)) expected_index = report.classes.size();
    ClassEntry entry{std::move(g)};
    for (const auto& a : alphas) entry.rho.push_back(spectral_radius(entry.graph, a, opts).rho);
    report.classes.push_back(std::move(entry));
  }

  report.match = true;
  report.unique = true;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    AlphaVerdict v;
    v.alpha = alpha_grid[j];
    for (std::size_t i = 1; i < report.classes.size(); ++i) {
      if (report.classes[i].rho[j] > report.classes[v.winner].rho[j]) v.winner = i;
    }
    v.winner_rho = report.classes[v.winner].rho[j];
    v.runner_up_rho = report.classes.size() == 1 ? v.winner_rho : -1.0;
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
      if (i != v.winner) v.runner_up_rho = std::max(v.runner_up_rho, report.classes[i].rho[j]);
    }
    v.unique = report.classes.size() == 1 || v.winner_rho - v.runner_up_rho > kUniquenessMargin;
    v.match = expected_index == v.winner;
    report.match = report.match && v.match;
    report.unique = report.unique && v.unique;
    report.verdicts.push_back(v);
  }
  if (!report.match || !report.unique) {
    const std::string what = describe(c) + (report.match ? ": winner is not unique" : ": winner differs from expected");
    throw ExtremalMismatchError(what, std::move(report));
  }
  return report;
}

std::vector<ChainReport> verify_broom_chain(int m, int k, const std::vector<double>& alpha_grid,
                                            const SpectralOptions& opts) {
  require_basic(m, k);
  if (m < 2) throw Error(Errc::InvalidParams, "the broom chain needs m >= 2");
  std::vector<ChainReport> out;
  for (double a : alpha_grid) {
    const Alpha alpha(a);
    ChainReport chain{a, {}};
    for (int d = 2; d <= m; ++d) chain.rho.push_back(spectral_radius(families::broom_S(m, d, k), alpha, opts).rho);
    for (std::size_t i = 1; i < chain.rho.size(); ++i) {
      if (!(chain.rho[i - 1] - chain.rho[i] > kUniquenessMargin)) {
        std::ostringstream msg;
        msg.precision(15);
        msg << "rho(S_{" << m << "," << i + 2 << "," << k << "}) = " << chain.rho[i] << " is not below rho(S_{" << m
            << "," << i + 1 << "," << k << "}) = " << chain.rho[i - 1] << " at alpha " << a;
        throw Error(Errc::ChainViolation, msg.str());
      }
    }
    out.push_back(std::move(chain));
  }
  return out;
}

UniformHypergraph random_connected(int m, int k, std::uint64_t seed) {
  require_basic(m, k);
  std::mt19937_64 rng(seed);
  EdgeList edges{std::vector<Vertex>(static_cast<std::size_t>(k))};
  std::iota(edges[0].begin(), edges[0].end(), 0);
  std::set<std::vector<Vertex>> seen{edges[0]};
  int n = k;
  std::vector<Vertex> pool;
  for (int i = 1; i < m; ++i) {
    for (int attempt = 0;; ++attempt) {
      const int most = attempt < 32 ? std::min(k, n) : 1;
      const int shared = std::uniform_int_distribution<int>(1, most)(rng);
      pool.resize(static_cast<std::size_t>(n));
      std::iota(pool.begin(), pool.end(), 0);
      std::vector<Vertex> e;
      std::sample(pool.begin(), pool.end(), std::back_inserter(e), shared, rng);
      for (int j = 0; j < k - shared; ++j) e.push_back(n + j);
      std::sort(e.begin(), e.end());
      if (!seen.insert(e).second) continue;
      n += k - shared;
      edges.push_back(std::move(e));
      break;
    }
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

}  // namespace hyperrho
