#pragma once

// One-point unions of cycles: the two explicit 2-colour families, the generic
// 3-colour labeling, and per-cycle label-preserving transformations.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// U(a_1, ..., a_r).  Orders need not be sorted; every order is >= 3, r >= 2.
struct UnionSpec {
  std::vector<int> orders;

  void validate() const;
  int cycle_count() const { return static_cast<int>(orders.size()); }
  int size() const;  // m = sum of orders
  // s_i = a_1 + ... + a_{i-1} (0-based i)
  int edge_offset(int i) const;
  std::string name() const;  // "U(16,16,20)"
};

// Cycle i, local vertex p (0 = central u) -> global vertex; local edge p joins
// local p and p+1 and is global edge edge_offset(i) + p.
struct LabeledUnion {
  UnionSpec spec;
  Graph graph;
  EdgeLabeling labeling;
  std::vector<std::vector<int>> cycle_vertices;

  int global_edge(int cycle, int p) const { return spec.edge_offset(cycle) + p; }
};

LabeledUnion build_union(const UnionSpec& spec);

// U((4r-2)^{[r-1]}, 2r-2), two colours, central sum 4r^2 - 2r.  r >= 3.
LabeledUnion union_2labeling_family1(int r);

// U((2r)^{[(r-1)/2]}, (2r-2)^{[(r+1)/2]}), two colours, central sum 2r^2 + r.
// r odd, r >= 5.
LabeledUnion union_2labeling_family2(int r);

// f(e_i) = i/2 for even i, m - (i-1)/2 for odd i (1-based global index).
// Every order must be >= 16.
LabeledUnion union_3labeling(const UnionSpec& spec);

struct KeepCycle {};
struct MergeCycle {
  MergePlan plan;  // on the cycle's local indices
};
// This cycle hosts the listed partners: partner edge p is moved onto host
// vertices p*step and (p+1)*step, and the partner's own vertices vanish.
struct RewireCycles {
  std::vector<std::pair<int, int>> partners;  // (partner cycle, step)
};
struct MatrixMerge {
  int s = 2;
  int t = 0;
};

using CycleDirective = std::variant<KeepCycle, MergeCycle, RewireCycles, MatrixMerge>;

std::string describe(const CycleDirective& d);

// Applies one directive per cycle.  Partners of a rewiring must be kept
// cycles of the same order and appear once.  Every block holding a local 0
// joins the central vertex.  Labels stay on their edges.
LabeledGraph transform_union(const LabeledUnion& u, const std::vector<CycleDirective>& directives);

// Case plan for every cycle (orders >= 16), KeepCycle otherwise.
std::vector<CycleDirective> case_directives(const UnionSpec& spec);

// Pairs equal-order cycles by rewiring with the smallest step in (1, n/2)
// coprime to n; leftovers get their case plan, or are kept below order 16.
std::vector<CycleDirective> paired_directives(const UnionSpec& spec);

}  // namespace antimagic
