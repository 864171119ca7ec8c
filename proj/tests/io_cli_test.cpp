#include <doctest.h>

#include <sstream>

#include "antimagic/circulant.hpp"
#include "antimagic/cli.hpp"
#include "antimagic/cycle_transform.hpp"
#include "antimagic/error.hpp"
#include "antimagic/io.hpp"

using namespace antimagic;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documents round-trip") {
  const auto t = transform_cycle(18, case_plan(3, 2));
  Document d;
  d.name = "case 3";
  d.graph = t.graph;
  d.labeling = t.labeling;
  d.checks["colors"] = t.expected_colors;
  const Document back = parse_document(dump_document(d));
  CHECK(back.name == d.name);
  CHECK(back.graph == d.graph);
  CHECK(back.labeling == d.labeling);
  CHECK(back.checks == d.checks);
  Document bare;
  bare.graph = build_cycle(4);
  CHECK_FALSE(parse_document(dump_document(bare)).labeling.has_value());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), Error);
  CHECK_THROWS_AS(parse_document("[1,2]"), Error);
  CHECK_THROWS_AS(parse_document(R"({"n": 3, "edges": [[0, 1, 2]]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"n": 3, "edges": [[0, 1]], "labels": [1, 2]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"n": 2, "edges": [[0, 5]]})"), Error);
}

TEST_CASE("dot export") {
  const auto f = c_labeling(4);
  const auto dot = to_dot(build_cycle(4), &f);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 [label=\"v0\\n4\"]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [label=\"1\"]") != std::string::npos);
}

TEST_CASE("cli: label then verify") {
  const auto labeled = run({"label", "circulant", "--m", "16", "--steps", "1,3"});
  REQUIRE(labeled.code == 0);
  const auto v = run({"verify"}, labeled.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("{52, 66, 68}") != std::string::npos);
}

TEST_CASE("cli: matrix construction verifies") {
  const auto m = run({"transform", "matrix", "--s", "3", "--t", "2"});
  REQUIRE(m.code == 0);
  const auto v = run({"verify"}, m.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("columns 516, rows 520, first row 456") != std::string::npos);
  const auto mat = run({"export", "matrix"}, m.out);
  CHECK(mat.code == 0);
  CHECK(mat.out.find("| 456") != std::string::npos);
}

TEST_CASE("cli: export json round-trips") {
  const auto labeled = run({"label", "union2a", "--r", "5"});
  const auto j = run({"export", "json"}, labeled.out);
  CHECK(j.code == 0);
  CHECK(parse_document(j.out).graph == parse_document(labeled.out).graph);
  CHECK(run({"verify"}, j.out).code == 0);
}

TEST_CASE("cli: every construction verifies") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"label", "c", "--m", "9"},
           {"label", "union2b", "--r", "9"},
           {"label", "union3", "--orders", "16,20"},
           {"transform", "case", "--case", "7", "--k", "3"},
           {"transform", "matrix", "--s", "2", "--t", "1", "--circulant"},
           {"transform", "union", "--family", "1", "--r", "9"},
           {"transform", "union", "--family", "3", "--orders", "16,16", "--directives", "case"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(run({"verify"}, r.out).code == 0);
  }
}

TEST_CASE("cli: failures and usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"label", "c"}).code == 2);
  const auto doc = run({"label", "c", "--m", "5"}).out;
  auto j = nlohmann::json::parse(doc);
  j["checks"]["colors"] = {1, 2, 3};
  const auto bad = run({"verify"}, j.dump());
  CHECK(bad.code == 1);
  CHECK(bad.err.find("expected colours") != std::string::npos);
  j["labels"] = {1, 1, 2, 3, 4};
  CHECK(run({"verify"}, j.dump()).code == 1);
  CHECK(run({"label", "circulant", "--m", "9", "--steps", "1,2"}).code == 1);
}

TEST_CASE("cli: oracle and structural commands") {
  const auto p = run({"build", "path", "--n", "3"});
  const auto o = run({"oracle", "chi-la"}, p.out);
  CHECK(o.code == 0);
  CHECK(o.out.find("chi_la = 3") != std::string::npos);
  const auto c11 = run({"build", "cycle", "--m", "11"});
  CHECK(run({"oracle", "chi-la"}, c11.out).code == 1);
  CHECK(run({"oracle", "chi-la", "--max-edges", "11", "--colors", "3"}, c11.out).out.find("feasible") == 0);
  CHECK(run({"iso", "--m", "16", "--from", "1,3", "--to", "1,5", "--mult", "11"}).code == 0);
  CHECK(run({"iso", "--m", "16", "--from", "1,3", "--to", "1,7"}).code == 1);
  const auto s = run({"spectrum", "--m", "16", "--steps", "1,3", "--compare", "1,7"});
  CHECK(s.out.find("different spectrum") != std::string::npos);
  CHECK(run({"build", "union", "--orders", "3,4"}).code == 0);
  CHECK(run({"build", "circulant", "--m", "16", "--steps", "1,3"}).code == 0);
  CHECK(run({"label", "c", "--m", "6"}).out.find("\"labels\"") != std::string::npos);
  const auto dot = run({"export", "dot"}, run({"label", "c", "--m", "4"}).out);
  CHECK(dot.out.find("graph G") == 0);
}

TEST_CASE("cli: reproduce subset") {
  const auto r = run({"reproduce", "--only", "3,6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 3.") != std::string::npos);
  CHECK(r.out.find("[PASS] 6.") != std::string::npos);
  CHECK(r.out.find("1.") == std::string::npos);
}
