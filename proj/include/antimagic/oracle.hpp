#pragma once

// Exhaustive search for the local antimagic chromatic number of small graphs.

#include <cstdint>
#include <optional>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

struct SearchBudget {
  int max_edges = 10;
  std::uint64_t node_limit = 2'000'000'000ULL;
  double time_limit_seconds = 600.0;
  int threads = 1;

  // Default budget with max_edges taken from ANTIMAGIC_BUDGET_EDGES if set.
  static SearchBudget from_env();
};

struct SearchResult {
  std::optional<int> chi_la;  // set by exact_chi_la
  std::optional<EdgeLabeling> witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Exact chi_la with an optimal witness.  Throws OverBudget or Disconnected.
SearchResult exact_chi_la(const Graph& g, const SearchBudget& budget = {});

// A local antimagic labeling with at most k colours, or no witness when none
// exists.
SearchResult feasible_with_colors(const Graph& g, int k, const SearchBudget& budget = {});

// Plain enumeration of all q! labelings without pruning.  Small graphs only.
int enumerate_chi_la(const Graph& g);

// Exact vertex chromatic number by backtracking.
int chromatic_number(const Graph& g);

}  // namespace antimagic
