#include <doctest.h>

#include "antimagic/circulant.hpp"
#include "antimagic/reproduce.hpp"

using namespace antimagic;

TEST_CASE("fault injection fails the first affected claim") {
  ReproduceOptions o;
  o.only = {1};
  // Swap the two middle labels of every C-labeling.
  o.cycle_labeler = [](int m) {
    auto f = c_labeling(m);
    std::swap(f.labels[1], f.labels[2]);
    return f;
  };
  const auto r = reproduce_all(o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Fail);
  CHECK(r[0].detail.rfind("C_", 0) == 0);
  MESSAGE("injected fault reported as: " << r[0].detail);
  CHECK_FALSE(all_passed(r));
}

TEST_CASE("over-budget oracle runs are skipped, not failed") {
  ReproduceOptions o;
  o.only = {9};
  o.budget.max_edges = 1;
  const auto r = reproduce_all(o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Skipped);
  CHECK(all_passed(r));
  o.budget.max_edges = 6;
  const auto partial = reproduce_all(o);
  CHECK(partial[0].status == Status::Pass);
  CHECK(partial[0].detail.find("over budget skipped") != std::string::npos);
}

TEST_CASE("missing golden files fail criterion 3") {
  ReproduceOptions o;
  o.only = {3};
  o.golden_dir = "/nonexistent";
  CHECK(reproduce_all(o)[0].status == Status::Fail);
}

TEST_CASE("parallel and sequential runs agree") {
  ReproduceOptions o;
  const auto seq = reproduce_all(o);
  o.parallel = true;
  const auto par = reproduce_all(o);
  REQUIRE(seq.size() == 10);
  REQUIRE(par.size() == 10);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].id == par[i].id);
    CHECK(seq[i].status == par[i].status);
    CHECK(seq[i].detail == par[i].detail);
  }
  CHECK(render_report(seq).find("[PASS] 10.") != std::string::npos);
}
