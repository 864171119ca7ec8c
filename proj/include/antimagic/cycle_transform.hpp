#pragma once

// Label-preserving merges of a C-labeled cycle into denser bipartite or
// tripartite graphs, and the iterated even/odd array construction that turns
// C_n into a 2^s-regular circulant.

#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// One of the eight named merge plans.  Case c with parameter k acts on the
// cycle of order case_order(c, k):
//   1: 8k   2: 8k+4   3: 8k+2   4: 8k+6   5: 8k+1   6: 8k+5   7: 8k+3   8: 8k+7
struct CasePlanId {
  int case_number = 1;
  int k = 2;

  int order() const;
};

int case_order(int case_number, int k);

// The case whose order is n, with k = n / 8 (k >= 2), or nullopt.
std::optional<CasePlanId> case_for_order(int n);

MergePlan case_plan(int case_number, int k);
MergePlan case_plan(const CasePlanId& id);

// Which construction the plan realises, keyed by n mod 4:
//   n = 4m    G_{2m}       pairs only, v_0 paired with an even vertex
//   n = 4m+2  G^1_{2m+1}   special block {v_0, v_{2m+1}}
//   n = 4m+1  G^2_{2m+1}   v_0 left alone
//   n = 4m+3  G^3_{2m+1}   special block {v_0, v_{m+1}, v_{3m+2}}
enum class CycleFamily { Even, Tripartite1, Tripartite2, Tripartite3 };

std::string family_name(CycleFamily family);

struct CycleTransform {
  Graph graph;
  EdgeLabeling labeling;  // the C-labeling of C_n, edge for edge
  CycleFamily family = CycleFamily::Even;
  int m = 0;
  int special_vertex = 0;           // merged vertex that holds v_0
  std::vector<Sum> expected_sums;   // per merged vertex, from the family formulas
  std::vector<Sum> expected_colors; // ascending
};

// Merges C_n (C-labeled) along the plan and checks the induced sums against
// the family formulas.  Plans must pair same-parity vertices; the block of v_0
// must match the family.
CycleTransform transform_cycle(int n, const MergePlan& plan);

// The u-renaming that identifies the Case 1 graph on C_{8k} with
// C_{4k}(1, 2k-1), certified edge by edge.
struct CirculantCertificate {
  Graph merged;
  CirculantSpec spec;
  std::vector<int> renaming;  // merged vertex -> circulant vertex
};

CirculantCertificate verify_case1_circulant(int k);

// Arrays of evens (rows of a) and odds (columns of b) for
// n = 2^{2s-1}(t+2); each row of a / column of b becomes one merged vertex.
struct EvenOddArrays {
  int s = 0;
  int t = 0;
  int n = 0;
  std::vector<std::vector<int>> a;  // 2^{s-1}(t+2) rows x 2^{s-1} columns
  std::vector<std::vector<int>> b;  // 2^{s-1} rows x 2^{s-1}(t+2) columns

  int order() const { return static_cast<int>(a.size()); }
  std::vector<int> column_of_b(int y) const;
};

EvenOddArrays build_even_odd_arrays(int s, int t);

// Rows of a as A-blocks, columns of b as B-blocks.
MergePlan matrix_merge_plan(const EvenOddArrays& arrays);

struct ConstructionMatrix {
  EvenOddArrays arrays;
  std::vector<std::vector<int>> incidence;               // 0/1, order x order
  std::vector<std::vector<std::optional<int>>> labels;   // edge labels
  std::vector<Sum> row_sums;
  std::vector<Sum> col_sums;
  CirculantSpec circulant;
  LabeledGraph merged;               // C_n merged along the arrays
  std::vector<int> row_vertex;       // merged vertex of row x
  std::vector<int> col_vertex;       // merged vertex of column y
  std::vector<int> renaming;         // merged vertex -> circulant vertex
  LabeledGraph circulant_labeled;    // labels carried over to the circulant
};

// Throws ConstructionFailure if any internal cross-check fails.
ConstructionMatrix build_construction_matrix(int s, int t);

std::string render_construction_matrix(const ConstructionMatrix& cm);

}  // namespace antimagic
