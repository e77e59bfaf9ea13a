#include "hyperrho/families.hpp"

#include "hyperrho/error.hpp"

namespace hyperrho::families {
namespace {

class Builder {
 public:
  explicit Builder(int k, int vertices = 1) : k_(k), next_(vertices) {}

  Vertex fresh() { return next_++; }

  // Edge through `anchors` filled up with fresh vertices; returns the last fresh one.
  Vertex add(std::vector<Vertex> anchors) {
    Vertex last = -1;
    while (static_cast<int>(anchors.size()) < k_) anchors.push_back(last = fresh());
    edges_.push_back(std::move(anchors));
    return last;
  }

  Vertex add_path(Vertex from, int length) {
    for (int i = 0; i < length; ++i) from = add({from});
    return from;
  }

  UniformHypergraph finish() { return UniformHypergraph::build(k_, next_, std::move(edges_)); }

 private:
  int k_;
  Vertex next_;
  EdgeList edges_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidParams, what);
}

}  // namespace

UniformHypergraph hyperstar(int m, int k) {
  require(m >= 1 && k >= 2, "hyperstar needs m >= 1, k >= 2");
  Builder b(k);
  for (int i = 0; i < m; ++i) b.add({0});
  return b.finish();
}

UniformHypergraph loose_path(int m, int k) {
  require(m >= 1 && k >= 2, "loose path needs m >= 1, k >= 2");
  Builder b(k);
  b.add_path(0, m);
  return b.finish();
}

UniformHypergraph cactus_H(int m, int r, int k) {
  require(m >= 1 && k >= 2 && r >= 0 && 2 * r <= m, "cactus H needs m >= 1 and 0 <= r <= m/2");
  require(r == 0 || k >= 3, "two-edge cycles need k >= 3 in a simple hypergraph");
  Builder b(k);
  for (int i = 0; i < r; ++i) {
    const Vertex a = b.fresh();
    b.add({0, a});
    b.add({0, a});
  }
  for (int i = 0; i < m - 2 * r; ++i) b.add({0});
  return b.finish();
}

UniformHypergraph broom_S(int m, int d, int k) {
  require(k >= 2 && d >= 2 && d <= m, "broom needs 2 <= d <= m");
  Builder b(k);
  b.add_path(0, d);
  const Vertex middle = (d / 2) * (k - 1);
  for (int i = 0; i < m - d; ++i) b.add({middle});
  return b.finish();
}

UniformHypergraph spider_T(int m, int t, int k) {
  require(k >= 2 && t >= 2 && t <= m, "spider needs 2 <= t <= m");
  const int base = m / t;
  const int longer = m - t * base;
  Builder b(k);
  for (int leg = 0; leg < t; ++leg) b.add_path(0, leg < longer ? base + 1 : base);
  return b.finish();
}

UniformHypergraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Star: return hyperstar(spec.m, spec.k);
    case Family::LoosePath: return loose_path(spec.m, spec.k);
    case Family::CactusH: return cactus_H(spec.m, spec.extra, spec.k);
    case Family::BroomS: return broom_S(spec.m, spec.extra, spec.k);
    case Family::SpiderT: return spider_T(spec.m, spec.extra, spec.k);
  }
  throw Error(Errc::InvalidParams, "unknown family");
}

std::string describe(const FamilySpec& spec) {
  const std::string m = std::to_string(spec.m), k = std::to_string(spec.k), x = std::to_string(spec.extra);
  switch (spec.family) {
    case Family::Star: return "S_{" + m + "," + k + "}";
    case Family::LoosePath: return "P_{" + m + "," + k + "}";
    case Family::CactusH: return "H_{" + m + "," + x + "," + k + "}";
    case Family::BroomS: return "S_{" + m + "," + x + "," + k + "}";
    case Family::SpiderT: return "T_{" + m + "," + x + "," + k + "}";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "star") return Family::Star;
  if (name == "path") return Family::LoosePath;
  if (name == "cactus") return Family::CactusH;
  if (name == "broom") return Family::BroomS;
  if (name == "spider") return Family::SpiderT;
  throw Error(Errc::InvalidParams, "unknown family '" + std::string(name) + "'");
}

}  // namespace hyperrho::families
