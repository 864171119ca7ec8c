#pragma once

// Edge labelings, induced vertex sums and the local antimagic checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

using Sum = std::int64_t;

// labels[i] is the label of edge i.  A valid labeling is a bijection onto {1..q}.
struct EdgeLabeling {
  std::vector<int> labels;

  int size() const { return static_cast<int>(labels.size()); }
  bool is_bijective() const;
  // Position of the edge carrying the given label, or -1.
  int edge_with_label(int label) const;
  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

struct InducedColoring {
  std::vector<Sum> sums;                        // f^+(v)
  std::vector<Sum> colors;                      // distinct sums, ascending
  std::vector<std::pair<int, int>> conflicts;   // adjacent u < v with equal sums
};

struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
};

// Throws InvalidLabeling unless f is a bijection onto {1..|E(g)|}.
void require_bijection(const Graph& g, const EdgeLabeling& f);

// Parallel edges each contribute to both endpoint sums and make their
// endpoints adjacent.
InducedColoring induced_coloring(const Graph& g, const EdgeLabeling& f);

struct AntimagicVerdict {
  bool ok = false;
  std::optional<std::pair<int, int>> conflict;

  explicit operator bool() const { return ok; }
};

AntimagicVerdict is_local_antimagic(const Graph& g, const EdgeLabeling& f);

struct ColorClasses {
  int count = 0;
  std::map<Sum, std::vector<int>> classes;  // sum -> vertices with that sum
};

// Requires a local antimagic labeling (Precondition error otherwise).
ColorClasses color_count(const Graph& g, const EdgeLabeling& f);

// label i -> q + 1 - i, positionwise.
EdgeLabeling complement_labeling(const EdgeLabeling& f);

// Sufficient condition for the complement to stay local antimagic with the
// same colour count on a non-regular graph:
//   equal sums imply equal degrees, and
//   unequal sums imply (q+1)(deg x - deg y) != f+(x) - f+(y).
bool check_nonreg_conditions(const Graph& g, const EdgeLabeling& f);

// True iff f(e) = 1, every colour class has a single degree d_a, and the
// shifted class values f+(x) - d_a are pairwise distinct.  In that case
// labeling_after_deletion(f, e) is local antimagic on G - e with the same
// number of colours.
bool check_edge_deletion_lemma(const Graph& g, const EdgeLabeling& f, int e);

// Drops edge e's label and closes the gap so the rest is a bijection onto
// {1..q-1}.  Positions follow delete_edge.
EdgeLabeling labeling_after_deletion(const EdgeLabeling& f, int e);

enum class TwoColorOutlook { Possible, AtLeastThreeForced };

// Necessary conditions for a 2-colour local antimagic labeling.  Passing them
// does not imply that one exists.
struct TwoColorVerdict {
  bool bipartite = false;
  int part1 = 0;  // |V_1|, the larger part when bipartite
  int part2 = 0;  // |V_2|
  int q = 0;
  Sum half_total = 0;  // (q+1 choose 2)
  bool parts_unequal = false;
  bool divisible_by_part1 = false;
  bool divisible_by_part2 = false;
  int pendant_count = 0;
  bool even_size_with_one_pendant = false;
  // Unequal parts and divisibility by both part sizes.
  bool corollary_conditions_hold = false;
  TwoColorOutlook outlook = TwoColorOutlook::AtLeastThreeForced;
  std::vector<std::string> reasons;  // why 3+ colours are forced, if they are
};

TwoColorVerdict check_two_color_necessary(const Graph& g);

// For a labeling with exactly two colours x < y on X and Y vertices: the
// colour classes are the bipartition and xX = yY = q(q+1)/2.  Returns false
// when the labeling does not have exactly two colours.
bool two_color_identity_holds(const Graph& g, const EdgeLabeling& f);

}  // namespace antimagic
