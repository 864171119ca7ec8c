#include <doctest.h>

#include "antimagic/error.hpp"
#include "antimagic/graph.hpp"

using namespace antimagic;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("cycle and path basics") {
  const Graph c = build_cycle(5);
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 5);
  CHECK(c.is_regular());
  CHECK(c.is_simple());
  CHECK(c.edge(4) == Edge{4, 0});
  const Graph p = build_path(4);
  CHECK(p.edge_count() == 3);
  CHECK(p.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(kind_of([] { build_cycle(2); }) == ErrorKind::InvalidOrder);
}

TEST_CASE("graph constructor rejects loops and bad endpoints") {
  CHECK(kind_of([] { Graph(3, {{0, 0}}); }) == ErrorKind::LoopCreated);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("circulant spec validation and construction") {
  CHECK(CirculantSpec{16, {1, 3}}.name() == "C_16(1,3)");
  CHECK_NOTHROW(CirculantSpec{16, {1, 3, 5, 7}}.validate());
  CHECK(kind_of([] { CirculantSpec{16, {3, 1}}.validate(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { CirculantSpec{16, {1, 8}}.validate(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { CirculantSpec{12, {1, 2}}.validate(); }) == ErrorKind::UnsupportedStep);
  CHECK(build_circulant({9, {1}}) == build_cycle(9));
  const Graph g = build_circulant({16, {1, 3}});
  CHECK(g.edge_count() == 32);
  CHECK(g.is_regular());
  CHECK(g.degree(0) == 4);
  // Gamma_1 edges come first.
  CHECK(g.edge(0) == Edge{0, 1});
}

TEST_CASE("merge plans") {
  MergePlan p;
  p.n = 8;
  p.blocks = {{0, 4}, {2, 6}, {1, 5}, {3, 7}};
  p.kinds = {BlockKind::A, BlockKind::A, BlockKind::B, BlockKind::B};
  CHECK_NOTHROW(p.validate());
  const Graph m = merge_vertices(build_cycle(8), p);
  CHECK(m.vertex_count() == 4);
  CHECK(m.edge_count() == 8);
  CHECK(m.vertex_name(0) == "v0,4");
  CHECK_FALSE(m.is_simple());  // C_8 folded twice onto C_4

  MergePlan bad = p;
  bad.blocks[0] = {0, 5};
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::ParityViolation);
  MergePlan missing = p;
  missing.blocks.pop_back();
  missing.kinds.pop_back();
  CHECK(kind_of([&] { missing.validate(); }) == ErrorKind::InvalidPlan);
  const std::vector<std::vector<int>> overlap{{0, 2}, {2}, {1}, {3}};
  CHECK(kind_of([&] { merge_vertices(build_cycle(4), overlap); }) == ErrorKind::InvalidPlan);
  const std::vector<std::vector<int>> loop{{0, 1}, {2}, {3}, {4}};
  CHECK(kind_of([&] { merge_vertices(build_cycle(5), loop); }) == ErrorKind::LoopCreated);
  CHECK(MergePlan::identity(5).blocks.size() == 5);
}

TEST_CASE("one-point union") {
  const std::vector<Graph> gs{build_cycle(3), build_cycle(4)};
  const std::vector<int> at{0, 0};
  const Graph u = one_point_union(gs, at);
  CHECK(u.vertex_count() == 6);
  CHECK(u.edge_count() == 7);
  CHECK(u.degree(0) == 4);
  CHECK(u.provenance(0) == std::vector<int>{0, 3});
}

TEST_CASE("edge deletion keeps relative order") {
  const Graph g = delete_edge(build_cycle(5), 1);
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(1) == Edge{2, 3});
  CHECK(kind_of([] { delete_edge(build_cycle(3), 3); }) == ErrorKind::OutOfRange);
}

TEST_CASE("partite classes and triangles") {
  CHECK(partite_classes(build_cycle(6), 2).has_value());
  CHECK_FALSE(partite_classes(build_cycle(5), 2).has_value());
  const auto tri = partite_classes(build_cycle(5), 3);
  REQUIRE(tri.has_value());
  CHECK(tri->size() == 3);
  CHECK(has_triangle(build_cycle(3)));
  CHECK_FALSE(has_triangle(build_cycle(4)));
  CHECK_FALSE(partite_classes(build_circulant({5, {1, 2}}), 3).has_value());  // K_5
  CHECK(build_circulant({5, {1, 2}}).is_connected());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("isomorphism search") {
  const Graph a = build_circulant({16, {1, 3}});
  const Graph b = build_circulant({16, {1, 5}});
  const Graph c = build_circulant({16, {1, 7}});
  const auto phi = are_isomorphic(a, b);
  REQUIRE(phi.has_value());
  CHECK(is_isomorphism(a, b, *phi));
  CHECK_FALSE(are_isomorphic(a, c).has_value());
  CHECK(are_isomorphic(build_circulant({8, {1, 3}}), complete_bipartite(4, 4)).has_value());
  CHECK_FALSE(are_isomorphic(build_cycle(6), build_cycle(5)).has_value());
}

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 16) == 1);
}
