#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "antimagic/circulant.hpp"
#include "antimagic/error.hpp"
#include "antimagic/oracle.hpp"

using namespace antimagic;

namespace {

Graph counterexample() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 3}, {1, 4}});
}

Graph random_connected(std::mt19937& rng, int n, int q) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> have;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
    have.insert({u, v});
  }
  while (static_cast<int>(edges.size()) < q) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (have.insert({u, v}).second) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("frozen values") {
  for (int m = 3; m <= 7; ++m) CHECK(exact_chi_la(build_cycle(m)).chi_la == 3);
  CHECK(exact_chi_la(build_path(3)).chi_la == 3);
  CHECK(exact_chi_la(build_path(4)).chi_la == 3);
  CHECK(exact_chi_la(counterexample()).chi_la == 3);
  CHECK(exact_chi_la(build_circulant({5, {1, 2}})).chi_la == 5);  // K_5
  CHECK(exact_chi_la(complete_bipartite(2, 3)).chi_la == 3);
}

TEST_CASE("feasibility with a colour bound") {
  CHECK_FALSE(feasible_with_colors(build_cycle(4), 2).witness.has_value());
  const auto w = feasible_with_colors(build_cycle(4), 3);
  REQUIRE(w.witness.has_value());
  CHECK(is_local_antimagic(build_cycle(4), *w.witness).ok);
  CHECK_FALSE(feasible_with_colors(counterexample(), 2).witness.has_value());
  // K_{1,2} fails the two-colour necessary conditions, and indeed has no 2-colour labeling.
  CHECK_FALSE(check_two_color_necessary(build_path(3)).outlook == TwoColorOutlook::Possible);
  CHECK_FALSE(feasible_with_colors(build_path(3), 2).witness.has_value());
}

TEST_CASE("pruned search equals plain enumeration up to 6 edges") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const int q = std::uniform_int_distribution<int>(n - 1, std::min(6, n * (n - 1) / 2))(rng);
    const Graph g = random_connected(rng, n, q);
    const int plain = enumerate_chi_la(g);
    if (plain < 0) continue;
    CHECK(exact_chi_la(g).chi_la == plain);
  }
  CHECK(enumerate_chi_la(build_cycle(6)) == 3);
}

TEST_CASE("witnesses and the chromatic lower bound") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const int q = std::uniform_int_distribution<int>(n - 1, std::min(9, n * (n - 1) / 2))(rng);
    const Graph g = random_connected(rng, n, q);
    const auto r = exact_chi_la(g);
    CHECK(*r.chi_la >= chromatic_number(g));
    const auto c = induced_coloring(g, *r.witness);
    CHECK(c.conflicts.empty());
    CHECK(static_cast<int>(c.colors.size()) == *r.chi_la);
  }
}

TEST_CASE("constructive witnesses agree with the oracle") {
  // C-labeling of C_8 and the 3-colour circulant C_8(1,3) (12 edges, above default).
  CHECK(exact_chi_la(build_cycle(8)).chi_la == color_count(build_cycle(8), c_labeling(8)).count);
  SearchBudget b;
  b.max_edges = 12;
  b.threads = 4;
  const auto lg = circulant_labeling({6, {1}});
  CHECK(exact_chi_la(lg.graph, b).chi_la == 3);
}

TEST_CASE("threads give the same answer") {
  SearchBudget b;
  b.threads = 3;
  CHECK(exact_chi_la(counterexample(), b).chi_la == 3);
  CHECK(exact_chi_la(complete_bipartite(2, 4), b).chi_la == exact_chi_la(complete_bipartite(2, 4)).chi_la);
}

TEST_CASE("budget and connectivity errors") {
  try {
    exact_chi_la(build_cycle(11));
    FAIL("expected over-budget");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverBudget);
  }
  try {
    exact_chi_la(Graph(4, {{0, 1}, {2, 3}}));
    FAIL("expected disconnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
  SearchBudget tiny;
  tiny.node_limit = 5;
  CHECK_THROWS_AS(exact_chi_la(counterexample(), tiny), Error);
  CHECK_THROWS_AS(exact_chi_la(Graph(2, {{0, 1}})), Error);  // K_2 has no labeling
}

TEST_CASE("budget from the environment") {
  setenv("ANTIMAGIC_BUDGET_EDGES", "7", 1);
  CHECK(SearchBudget::from_env().max_edges == 7);
  setenv("ANTIMAGIC_BUDGET_EDGES", "seven", 1);
  CHECK_THROWS_AS(SearchBudget::from_env(), Error);
  unsetenv("ANTIMAGIC_BUDGET_EDGES");
  CHECK(SearchBudget::from_env().max_edges == 10);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(build_cycle(6)) == 2);
  CHECK(chromatic_number(build_cycle(7)) == 3);
  CHECK(chromatic_number(build_circulant({5, {1, 2}})) == 5);
  CHECK(chromatic_number(complete_bipartite(3, 3)) == 2);
}
