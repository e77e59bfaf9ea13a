#pragma once

#include <string>
#include <string_view>

#include "hyperrho/hypergraph.hpp"

// Named extremal families.  Labelling is deterministic: the hub / centre /
// first path vertex is 0 and fresh vertices are numbered in generation order.
namespace hyperrho::families {

// S_{m,k}: m edges through vertex 0.
UniformHypergraph hyperstar(int m, int k);
// P_{m,k}: edge i is {i(k-1), ..., (i+1)(k-1)}, so v_i = i(k-1).
UniformHypergraph loose_path(int m, int k);
// H_{m,r,k}: r two-edge cycles (edges sharing exactly {0, a_i}) and m-2r
// pendant edges at vertex 0.  Requires k >= 3 when r >= 1.
UniformHypergraph cactus_H(int m, int r, int k);
// S_{m,d,k}: P_{d,k} with m-d pendant edges at v_{floor(d/2)}.
UniformHypergraph broom_S(int m, int d, int k);
// T_{m,t,k}: t pendant paths at vertex 0 with lengths floor(m/t) or floor(m/t)+1.
UniformHypergraph spider_T(int m, int t, int k);

enum class Family { Star, LoosePath, CactusH, BroomS, SpiderT };

struct FamilySpec {
  Family family;
  int m = 1;
  int k = 2;
  int extra = 0;  // r for CactusH, d for BroomS, t for SpiderT
};

UniformHypergraph generate(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);
// "star", "path", "cactus", "broom", "spider"; throws InvalidParams otherwise.
Family parse_family(std::string_view name);

}  // namespace hyperrho::families
