#include <doctest.h>

#include <algorithm>

#include "antimagic/cycle_transform.hpp"
#include "antimagic/error.hpp"
#include "antimagic/union_transform.hpp"

using namespace antimagic;

namespace {

Sum total(const std::vector<Sum>& v) {
  Sum s = 0;
  for (Sum x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("union spec") {
  const UnionSpec s{{16, 20, 24}};
  CHECK(s.size() == 60);
  CHECK(s.edge_offset(2) == 36);
  CHECK(s.name() == "U(16,20,24)");
  CHECK_THROWS_AS(UnionSpec{{16}}.validate(), Error);
  CHECK_THROWS_AS((UnionSpec{{16, 2}}.validate()), Error);
  const auto u = build_union(s);
  CHECK(u.graph.degree(0) == 6);
  CHECK(u.cycle_vertices[1][1] == 16);
  CHECK(u.graph.edge(u.global_edge(1, 0)) == Edge{0, 16});
}

TEST_CASE("family 1") {
  for (int r = 3; r <= 14; ++r) {
    const auto u = union_2labeling_family1(r);
    const Sum R = r;
    const auto c = induced_coloring(u.graph, u.labeling);
    CHECK(c.conflicts.empty());
    CHECK(c.colors == std::vector<Sum>{4 * R * R - 4 * R + 1, 4 * R * R - 2 * R});
    CHECK(c.sums[0] == 4 * R * R - 2 * R);
    CHECK(two_color_identity_holds(u.graph, u.labeling));
    const Sum m = u.spec.size();
    CHECK(total(c.sums) == m * (m + 1));
  }
  CHECK(union_2labeling_family1(9).labeling.labels.back() == 2 * 81 - 9);
  CHECK_THROWS_AS(union_2labeling_family1(2), Error);
}

TEST_CASE("family 2") {
  for (int r = 5; r <= 19; r += 2) {
    const auto u = union_2labeling_family2(r);
    const Sum R = r;
    const auto c = induced_coloring(u.graph, u.labeling);
    CHECK(c.conflicts.empty());
    CHECK(c.colors == std::vector<Sum>{2 * R * R - R, 2 * R * R + R});
    CHECK(c.sums[0] == 2 * R * R + R);
    CHECK(two_color_identity_holds(u.graph, u.labeling));
  }
  const auto u9 = union_2labeling_family2(9);
  CHECK(std::count(u9.spec.orders.begin(), u9.spec.orders.end(), 18) == 4);
  CHECK(std::count(u9.spec.orders.begin(), u9.spec.orders.end(), 16) == 5);
  try {
    union_2labeling_family2(8);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
  CHECK_THROWS_AS(union_2labeling_family2(3), Error);
}

TEST_CASE("generic 3-labeling") {
  const auto u = union_3labeling(UnionSpec{{16, 16}});
  const auto c = induced_coloring(u.graph, u.labeling);
  CHECK(c.conflicts.empty());
  CHECK(c.colors.size() == 3);
  CHECK(c.sums[0] >= 80);
  // Alternation along the first cycle: v_1 follows e_1 (odd) -> m+1.
  CHECK(c.sums[u.cycle_vertices[0][1]] == 33);
  CHECK(c.sums[u.cycle_vertices[0][2]] == 32);
  CHECK_THROWS_AS((union_3labeling(UnionSpec{{16, 12}})), Error);
}

TEST_CASE("identity directives leave the union unchanged") {
  const auto u = union_3labeling(UnionSpec{{16, 20}});
  const auto t = transform_union(u, std::vector<CycleDirective>(2, KeepCycle{}));
  CHECK(t.graph.edges() == u.graph.edges());
  CHECK(t.labeling == u.labeling);
}

TEST_CASE("transform conserves labels and sums") {
  const auto u = union_2labeling_family1(9);
  const auto dirs = paired_directives(u.spec);
  CHECK(describe(dirs[0]) == "rewire(1@3)");
  const auto t = transform_union(u, dirs);
  CHECK(t.labeling == u.labeling);
  const auto before = induced_coloring(u.graph, u.labeling).sums;
  const auto after = induced_coloring(t.graph, t.labeling).sums;
  for (int v = 0; v < t.graph.vertex_count(); ++v) {
    Sum s = 0;
    for (int x : t.graph.provenance(v)) {
      // provenance holds disjoint-union indices; map back through the union
      const auto& p = u.graph.provenance();
      for (int w = 0; w < u.graph.vertex_count(); ++w) {
        if (std::find(p[w].begin(), p[w].end(), x) != p[w].end()) {
          s += before[w];
          break;
        }
      }
    }
    // the central vertex absorbs every copy of the hub once
    if (v != 0) CHECK(s == after[v]);
  }
  CHECK(after[0] == 612);
  CHECK(t.graph.vertex_count() == 4 * 33 + 7 + 1);
}

TEST_CASE("transform rejects bad directives") {
  const auto u = union_2labeling_family1(5);  // four C_18 and one C_8
  std::vector<CycleDirective> d(5, KeepCycle{});
  d[0] = RewireCycles{{{1, 3}}};  // gcd(3, 18) = 3
  CHECK_THROWS_AS(transform_union(u, d), Error);
  d[0] = RewireCycles{{{1, 5}}};
  d[1] = MergeCycle{case_plan(1, 2)};
  CHECK_THROWS_AS(transform_union(u, d), Error);  // partner is not kept
  d[1] = KeepCycle{};
  d[2] = RewireCycles{{{1, 5}}};
  CHECK_THROWS_AS(transform_union(u, d), Error);  // partner used twice
  d[2] = KeepCycle{};
  d[4] = RewireCycles{{{3, 5}}};
  CHECK_THROWS_AS(transform_union(u, d), Error);  // orders differ
  CHECK_THROWS_AS(transform_union(u, std::vector<CycleDirective>(4, KeepCycle{})), Error);
  d[4] = MergeCycle{case_plan(1, 2)};  // plan for C_16 on a C_8
  CHECK_THROWS_AS(transform_union(u, d), Error);
}

TEST_CASE("unions of 4-regular pieces: bipartition and divisibility") {
  struct Shape {
    std::vector<int> orders;
    int big, small;
  };
  for (const auto& s : std::vector<Shape>{{{16, 16}, 8, 7}, {{16, 20}, 9, 8}, {{20, 20, 24}, 16, 14}}) {
    const auto u = union_3labeling(UnionSpec{s.orders});
    const auto t = transform_union(u, case_directives(u.spec));
    const Sum m = u.spec.size();
    const auto c = induced_coloring(t.graph, t.labeling);
    CHECK(c.conflicts.empty());
    CHECK(c.colors.size() == 3);
    CHECK(std::count(c.colors.begin(), c.colors.end(), 2 * m) == 1);
    CHECK(std::count(c.colors.begin(), c.colors.end(), 2 * m + 2) == 1);
    const auto v = check_two_color_necessary(t.graph);
    CHECK(v.bipartite);
    CHECK(v.part1 == s.big);
    CHECK(v.part2 == s.small);
    CHECK_FALSE(v.divisible_by_part2);
    CHECK(v.outlook == TwoColorOutlook::AtLeastThreeForced);
    // Deleting label 1 keeps three colours.
    const int e = t.labeling.edge_with_label(1);
    CHECK(check_edge_deletion_lemma(t.graph, t.labeling, e));
    CHECK(color_count(delete_edge(t.graph, e), labeling_after_deletion(t.labeling, e)).count <= 3);
  }
}

TEST_CASE("matrix directive inside a union") {
  const auto u = union_3labeling(UnionSpec{{32, 16}});
  std::vector<CycleDirective> d{MatrixMerge{2, 2}, MergeCycle{case_plan(1, 2)}};
  const auto t = transform_union(u, d);
  CHECK(is_local_antimagic(t.graph, t.labeling).ok);
  CHECK(color_count(t.graph, t.labeling).count == 3);
  d[0] = MatrixMerge{2, 0};  // n = 16, not 32
  CHECK_THROWS_AS(transform_union(u, d), Error);
}
