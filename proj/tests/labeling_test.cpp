#include <doctest.h>

#include "antimagic/circulant.hpp"
#include "antimagic/error.hpp"
#include "antimagic/labeling.hpp"

using namespace antimagic;

TEST_CASE("bijection checks") {
  CHECK(EdgeLabeling{{2, 3, 1}}.is_bijective());
  CHECK_FALSE(EdgeLabeling{{2, 2, 1}}.is_bijective());
  CHECK_FALSE(EdgeLabeling{{0, 1, 2}}.is_bijective());
  CHECK(EdgeLabeling{{2, 3, 1}}.edge_with_label(1) == 2);
  CHECK(EdgeLabeling{{2, 3, 1}}.edge_with_label(7) == -1);
  CHECK_THROWS_AS(require_bijection(build_cycle(3), EdgeLabeling{{1, 2}}), Error);
}

TEST_CASE("induced sums on P_3") {
  const Graph p = build_path(3);
  const auto c = induced_coloring(p, EdgeLabeling{{1, 2}});
  CHECK(c.sums == std::vector<Sum>{1, 3, 2});
  CHECK(c.colors == std::vector<Sum>{1, 2, 3});
  CHECK(c.conflicts.empty());
}

TEST_CASE("conflicts are reported") {
  // C_4 with labels 1,2,3,4 around: sums 5,3,5,7 -> no conflict (0 and 2 not adjacent).
  CHECK(is_local_antimagic(build_cycle(4), EdgeLabeling{{1, 2, 3, 4}}));
  // P_4 with 3,1,2: sums 3,4,3,2, the equal sums are not adjacent.
  CHECK(is_local_antimagic(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), EdgeLabeling{{3, 1, 2}}));
  const auto bad = is_local_antimagic(Graph(2, {{0, 1}}), EdgeLabeling{{1}});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.conflict.has_value());
  CHECK(*bad.conflict == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(color_count(Graph(2, {{0, 1}}), EdgeLabeling{{1}}), Error);
}

TEST_CASE("colour classes of the C-labeling") {
  const auto cc = color_count(build_cycle(8), c_labeling(8));
  CHECK(cc.count == 3);
  CHECK(cc.classes.at(6) == std::vector<int>{0});
  CHECK(cc.classes.at(9).size() == 4);
  CHECK(cc.classes.at(10).size() == 3);
}

TEST_CASE("complement") {
  const auto f = c_labeling(7);
  const auto g = complement_labeling(f);
  for (int i = 0; i < 7; ++i) CHECK(f.labels[i] + g.labels[i] == 8);
  CHECK(complement_labeling(g) == f);
  CHECK(color_count(build_cycle(7), g).count == 3);
}

TEST_CASE("edge deletion lemma on the cycle") {
  for (int m = 4; m <= 12; ++m) {
    const Graph c = build_cycle(m);
    const auto f = c_labeling(m);
    const int e = f.edge_with_label(1);
    CHECK(check_edge_deletion_lemma(c, f, e));
    const auto h = labeling_after_deletion(f, e);
    CHECK(h.is_bijective());
    CHECK(is_local_antimagic(delete_edge(c, e), h));
    // A label other than 1 never qualifies.
    CHECK_FALSE(check_edge_deletion_lemma(c, f, f.edge_with_label(2)));
  }
}

TEST_CASE("non-regular complement conditions") {
  // P_3 with labels 1,2: sums 1,3,2.  Complement 2,1: sums 2,3,1.
  CHECK(check_nonreg_conditions(build_path(3), EdgeLabeling{{1, 2}}));
  // Star K_{1,2} plus pendant: equal sums on different degrees fail the first condition.
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(check_nonreg_conditions(g, EdgeLabeling{{3, 1, 2}}));  // sums 3,4,3,2: 0 (deg 1) and 2 (deg 2)
}

TEST_CASE("two-colour necessary conditions") {
  SUBCASE("equal parts force three colours") {
    const auto v = check_two_color_necessary(build_cycle(6));
    CHECK(v.bipartite);
    CHECK_FALSE(v.parts_unequal);
    CHECK(v.outlook == TwoColorOutlook::AtLeastThreeForced);
  }
  SUBCASE("non-bipartite") {
    CHECK(check_two_color_necessary(build_cycle(5)).outlook == TwoColorOutlook::AtLeastThreeForced);
  }
  SUBCASE("P_7 plus chords passes the divisibility test but has one pendant and q even") {
    const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 3}, {1, 4}});
    const auto v = check_two_color_necessary(g);
    CHECK(v.part1 == 4);
    CHECK(v.part2 == 3);
    CHECK(v.q == 8);
    CHECK(v.half_total == 36);
    CHECK(v.corollary_conditions_hold);
    CHECK(v.pendant_count == 1);
    CHECK(v.even_size_with_one_pendant);
    CHECK(v.outlook == TwoColorOutlook::AtLeastThreeForced);
  }
  SUBCASE("K_{1,2}: 3 is not divisible by the part of size 2") {
    const auto v = check_two_color_necessary(build_path(3));
    CHECK(v.parts_unequal);
    CHECK_FALSE(v.divisible_by_part1);
    CHECK(v.outlook == TwoColorOutlook::AtLeastThreeForced);
  }
}

TEST_CASE("two-colour identity") {
  // Star K_{1,3}: centre 6, leaves 1,2,3 -> 4 colours, identity not applicable.
  CHECK_FALSE(two_color_identity_holds(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), EdgeLabeling{{1, 2, 3}}));
}
