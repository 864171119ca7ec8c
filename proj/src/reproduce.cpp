#include "antimagic/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "antimagic/circulant.hpp"
#include "antimagic/cycle_transform.hpp"
#include "antimagic/error.hpp"
#include "antimagic/union_transform.hpp"

#ifndef ANTIMAGIC_GOLDEN_DIR
#define ANTIMAGIC_GOLDEN_DIR "tests/golden"
#endif

namespace antimagic {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIP";
  }
  return "?";
}

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Skip : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::string join(const std::vector<Sum>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<Sum> sorted_set(std::vector<Sum> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Colour set of a labeling that must be local antimagic.
std::vector<Sum> colors_of(const Graph& g, const EdgeLabeling& f, const std::string& what) {
  const auto c = induced_coloring(g, f);
  if (!c.conflicts.empty()) {
    throw Failure(what + ": adjacent vertices " + std::to_string(c.conflicts.front().first) + "," +
                  std::to_string(c.conflicts.front().second) + " share a sum");
  }
  return c.colors;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string c1(const ReproduceOptions& o) {
  auto labeler = o.cycle_labeler ? o.cycle_labeler : c_labeling;
  for (int m = 3; m <= 200; ++m) {
    const auto colors = colors_of(build_cycle(m), labeler(m), "C_" + std::to_string(m));
    const auto want = sorted_set({m / 2 + 2, m + 1, m + 2});
    require(colors == want, "C_" + std::to_string(m) + " colours {" + join(colors) + "}, expected {" + join(want) + "}");
  }
  return "198 cycles, colours {floor(m/2)+2, m+1, m+2}";
}

std::string c2(const ReproduceOptions&) {
  int checked = 0;
  for (int m = 4; m <= 60; m += 2) {
    std::vector<int> odd;
    for (int a = 3; 2 * a < m; a += 2) {
      if (gcd(a, m) == 1) odd.push_back(a);
    }
    std::vector<std::vector<int>> sets{{1}};
    for (std::size_t i = 0; i < odd.size(); ++i) {
      sets.push_back({1, odd[i]});
      for (std::size_t j = i + 1; j < odd.size(); ++j) sets.push_back({1, odd[i], odd[j]});
    }
    for (const auto& steps : sets) {
      const CirculantSpec spec{m, steps};
      const auto lg = circulant_labeling(spec);
      const auto colors = colors_of(lg.graph, lg.labeling, spec.name());
      const auto cf = circulant_closed_forms(m, static_cast<int>(steps.size()) - 1);
      const auto want = sorted_set({cf.hub, cf.odd, cf.even});
      require(want.size() == 3 && colors == want,
              spec.name() + " colours {" + join(colors) + "}, closed forms {" + join(want) + "}");
      const auto sums = induced_coloring(lg.graph, lg.labeling).sums;
      for (int v = 0; v < m; ++v) {
        const Sum expect = v == 0 ? cf.hub : (v % 2 ? cf.odd : cf.even);
        require(sums[v] == expect, spec.name() + " vertex " + std::to_string(v) + " off its closed form");
      }
      ++checked;
    }
  }
  return std::to_string(checked) + " circulants";
}

std::string c3(const ReproduceOptions& o) {
  const std::string dir = o.golden_dir.empty() ? ANTIMAGIC_GOLDEN_DIR : o.golden_dir;
  for (int a : {3, 7}) {
    const CirculantSpec spec{16, {1, a}};
    const auto lg = circulant_labeling(spec);
    const std::string got = render_matrix(labeling_matrix_view(lg.graph, lg.labeling));
    const std::string want = read_file(dir + "/C16_1_" + std::to_string(a) + ".txt");
    require(got == want, spec.name() + " matrix differs from the golden table");
    require(colors_of(lg.graph, lg.labeling, spec.name()) == std::vector<Sum>{52, 66, 68}, spec.name() + " sums");
  }
  return "both tables match cell for cell, sums 52/66/68";
}

std::string c4(const ReproduceOptions&) {
  const auto x = circulant_spectrum({16, {1, 3}});
  const auto y = circulant_spectrum({16, {1, 7}});
  require(!same_spectrum(x, y), "spectra of C_16(1,3) and C_16(1,7) coincide");
  for (const auto* s : {&x, &y}) {
    require(std::abs((*s)[0] - 4) < 1e-9 && std::abs((*s)[8] + 4) < 1e-9, "lambda_0 / lambda_8 not 4 / -4");
  }
  struct Map {
    std::vector<int> from, to;
    int b;
  };
  const std::vector<Map> maps{{{1, 3}, {1, 5}, 11}, {{1, 3, 5}, {1, 3, 7}, 3}, {{1, 3, 5}, {1, 5, 7}, 5}};
  for (const auto& mp : maps) {
    require(certify_multiplier(16, mp.from, mp.to, mp.b).has_value(),
            "i -> " + std::to_string(mp.b) + "i fails to certify");
  }
  return "spectra differ; 11i, 3i, 5i certified";
}

std::vector<Sum> case_colors(int c, int k) {
  switch (c) {
    case 1: return sorted_set({16 * k + 4, 16 * k + 2, 12 * k + 4});
    case 2: return sorted_set({16 * k + 12, 16 * k + 10, 12 * k + 10});
    case 3: return sorted_set({16 * k + 8, 16 * k + 6, 12 * k + 6});
    case 4: return sorted_set({16 * k + 16, 16 * k + 14, 12 * k + 12});
    case 5: return sorted_set({16 * k + 6, 16 * k + 4, 4 * k + 2});
    case 6: return sorted_set({16 * k + 14, 16 * k + 12, 4 * k + 4});
    case 7: return sorted_set({16 * k + 10, 16 * k + 8, 20 * k + 12});
    default: return sorted_set({16 * k + 18, 16 * k + 16, 20 * k + 22});
  }
}

// Deletes the edge labelled 1 (or n, via the complement) and re-verifies.
void check_deletion(const Graph& g, const EdgeLabeling& f, bool top, const std::string& what) {
  EdgeLabeling h = f;
  if (top) {
    h = complement_labeling(f);
    require(is_local_antimagic(g, h).ok, what + ": complement not local antimagic");
    if (!g.is_regular()) require(check_nonreg_conditions(g, f), what + ": complement conditions fail");
  }
  const int e = h.edge_with_label(1);
  require(check_edge_deletion_lemma(g, h, e), what + ": deletion lemma fails at label " + (top ? "n" : "1"));
  const Graph d = delete_edge(g, e);
  const auto dl = labeling_after_deletion(h, e);
  require(colors_of(d, dl, what + " minus an edge").size() == 3, what + ": edge-deleted variant not 3 colours");
}

std::string c5(const ReproduceOptions&) {
  for (int c = 1; c <= 8; ++c) {
    for (int k = 2; k <= 6; ++k) {
      const std::string what = "case " + std::to_string(c) + " k=" + std::to_string(k);
      const int n = case_order(c, k);
      const auto t = transform_cycle(n, case_plan(c, k));
      // (a) labels and sums carried over
      require(t.labeling == c_labeling(n) && t.graph.edge_count() == n, what + ": labels not conserved");
      const auto orig = induced_coloring(build_cycle(n), c_labeling(n)).sums;
      const auto sums = induced_coloring(t.graph, t.labeling).sums;
      for (int v = 0; v < t.graph.vertex_count(); ++v) {
        Sum s = 0;
        for (int x : t.graph.provenance(v)) s += orig[x];
        require(s == sums[v], what + ": merged sum differs from its members");
      }
      // (b) degree profile and partiteness
      auto deg = t.graph.degrees();
      std::sort(deg.begin(), deg.end());
      const int odd_one = c <= 4 ? 4 : (c <= 6 ? 2 : 6);
      const int odd_count = std::count_if(deg.begin(), deg.end(), [](int d) { return d != 4; });
      require(c <= 4 ? odd_count == 0 : (odd_count == 1 && std::count(deg.begin(), deg.end(), odd_one) == 1),
              what + ": degree profile");
      const bool bip = partite_classes(t.graph, 2).has_value();
      const bool tri = partite_classes(t.graph, 3).has_value();
      if (c <= 2) require(bip, what + ": not bipartite");
      else require(!bip && tri, what + ": not tripartite");
      if (c == 3 || c == 4) require(has_triangle(t.graph), what + ": no K3");
      // (c) colours
      const auto colors = colors_of(t.graph, t.labeling, what);
      require(colors == case_colors(c, k), what + ": colours {" + join(colors) + "}");
      check_deletion(t.graph, t.labeling, false, what);
      check_deletion(t.graph, t.labeling, true, what);
    }
  }
  return "40 transforms, 80 edge-deleted variants";
}

std::string c6(const ReproduceOptions&) {
  for (int k = 2; k <= 6; ++k) {
    const auto cert = verify_case1_circulant(k);
    require(is_isomorphism(cert.merged, build_circulant(cert.spec), cert.renaming), "k=" + std::to_string(k));
    if (k == 2) require(are_isomorphic(cert.merged, complete_bipartite(4, 4)).has_value(), "G_8 is not K_{4,4}");
  }
  return "k=2..6 certified, G_8 = K_{4,4}";
}

std::string c7(const ReproduceOptions&) {
  for (int s : {2, 3}) {
    for (int t : {0, 1, 2}) {
      const std::string what = "s=" + std::to_string(s) + " t=" + std::to_string(t);
      const auto cm = build_construction_matrix(s, t);
      const Sum n = cm.arrays.n;
      const Sum h = Sum{1} << (s - 1);
      for (Sum c : cm.col_sums) require(c == h * (n + 1), what + ": column sum " + std::to_string(c));
      for (std::size_t x = 0; x < cm.row_sums.size(); ++x) {
        require(cm.row_sums[x] == h * (n + 2) - (x == 0 ? n / 2 : 0), what + ": row sum " + std::to_string(x));
      }
      require(colors_of(cm.circulant_labeled.graph, cm.circulant_labeled.labeling, what).size() == 3,
              what + ": circulant not 3 colours");
      if (s == 3 && t == 2) {
        require(n == 128 && cm.row_sums[0] == 456 && cm.row_sums[1] == 520 && cm.col_sums[0] == 516,
                "n=128 first row / rows / columns are not 456/520/516");
        require(cm.arrays.a[0] == std::vector<int>{0, 16, 64, 80}, "first row of the even array");
        require(cm.arrays.column_of_b(0) == std::vector<int>{1, 9, 33, 41}, "first column of the odd array");
        require(cm.circulant.name() == "C_32(1,7,9,15)", "circulant is " + cm.circulant.name());
      }
    }
  }
  return "6 matrices; n=128 gives 456/520/516";
}

std::string c8(const ReproduceOptions&) {
  for (int r : {9, 13}) {
    const auto u = union_2labeling_family1(r);
    const auto colors = colors_of(u.graph, u.labeling, "family 1");
    const auto sums = induced_coloring(u.graph, u.labeling).sums;
    require(colors == sorted_set({4 * r * r - 4 * r + 1, 4 * r * r - 2 * r}), "family 1 r=" + std::to_string(r));
    require(sums[0] == 4 * r * r - 2 * r, "family 1 central sum");
    require(two_color_identity_holds(u.graph, u.labeling), "family 1 identity");
  }
  for (int r : {9, 17}) {
    const auto u = union_2labeling_family2(r);
    const auto colors = colors_of(u.graph, u.labeling, "family 2");
    const auto sums = induced_coloring(u.graph, u.labeling).sums;
    require(colors == sorted_set({2 * r * r - r, 2 * r * r + r}), "family 2 r=" + std::to_string(r));
    require(sums[0] == 2 * r * r + r, "family 2 central sum");
    require(two_color_identity_holds(u.graph, u.labeling), "family 2 identity");
  }
  {
    const auto u = union_2labeling_family1(9);
    const auto t = transform_union(u, paired_directives(u.spec));
    require(colors_of(t.graph, t.labeling, "transformed family 1") == std::vector<Sum>{578, 612},
            "transformed family 1 colours");
    require(induced_coloring(t.graph, t.labeling).sums[0] == 612, "transformed central sum");
  }
  for (const auto& orders : std::vector<std::vector<int>>{{16, 16}, {16, 20}, {20, 20, 24}}) {
    const auto u = union_3labeling(UnionSpec{orders});
    const std::string what = u.spec.name();
    const Sum m = u.spec.size();
    const auto colors = colors_of(u.graph, u.labeling, what);
    const auto sums = induced_coloring(u.graph, u.labeling).sums;
    require(colors.size() == 3 && sums[0] >= 2 * m + 16, what + ": colours or central sum");
    for (int v = 1; v < u.graph.vertex_count(); ++v) require(sums[v] == m || sums[v] == m + 1, what + ": degree-2 sum");
    const auto t = transform_union(u, case_directives(u.spec));
    require(colors_of(t.graph, t.labeling, what + " transformed").size() == 3, what + ": transform not 3 colours");
    const auto verdict = check_two_color_necessary(t.graph);
    require(verdict.bipartite, what + ": transform not bipartite");
    require(!(verdict.divisible_by_part1 && verdict.divisible_by_part2) &&
                verdict.outlook == TwoColorOutlook::AtLeastThreeForced,
            what + ": divisibility does not exclude 2 colours");
  }
  return "families, transform {578,612}, 3 union shapes";
}

Graph counterexample() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 3}, {1, 4}});
}

std::string c9(const ReproduceOptions& o) {
  const auto& b = o.budget;
  int skipped = 0, ran = 0;
  auto over = [&](const Graph& g) { return g.edge_count() > b.max_edges; };
  for (int m = 3; m <= 7; ++m) {
    const Graph g = build_cycle(m);
    if (over(g)) {
      ++skipped;
      continue;
    }
    const auto r = exact_chi_la(g, b);
    require(r.chi_la == 3, "chi_la(C_" + std::to_string(m) + ") = " + std::to_string(*r.chi_la));
    require(is_local_antimagic(g, *r.witness).ok, "C_m witness fails");
    ++ran;
  }
  const Graph p = counterexample();
  if (over(p)) {
    ++skipped;
  } else {
    require(!feasible_with_colors(p, 2, b).witness, "counterexample has a 2-colour labeling");
    require(exact_chi_la(p, b).chi_la >= 3, "counterexample below 3");
    ++ran;
  }
  std::mt19937 rng(20260419);
  int made = 0;
  while (made < 50) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < n; ++v) {
      const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
      edges.push_back({u, v});
      have.insert({u, v});
    }
    const int target = std::uniform_int_distribution<int>(n - 1, std::min(9, n * (n - 1) / 2))(rng);
    while (static_cast<int>(edges.size()) < target) {
      int u = std::uniform_int_distribution<int>(0, n - 1)(rng), v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (have.insert({u, v}).second) edges.push_back({u, v});
    }
    const Graph g(n, edges);
    ++made;
    if (over(g)) {
      ++skipped;
      continue;
    }
    const auto r = exact_chi_la(g, b);
    require(*r.chi_la >= chromatic_number(g), "chi_la below the chromatic number on random graph " +
                                                   std::to_string(made));
    const auto c = induced_coloring(g, *r.witness);
    require(c.conflicts.empty() && static_cast<int>(c.colors.size()) == *r.chi_la, "witness fails to re-verify");
    ++ran;
  }
  if (ran == 0) throw Skip("every instance exceeds the edge budget of " + std::to_string(b.max_edges));
  std::string out = std::to_string(ran) + " instances solved";
  if (skipped) out += ", " + std::to_string(skipped) + " over budget skipped";
  return out;
}

std::string c10(const ReproduceOptions&) {
  int regular = 0, nonreg = 0, two = 0;
  auto complement_keeps = [&](const Graph& g, const EdgeLabeling& f, const std::string& what) {
    const auto n0 = colors_of(g, f, what).size();
    const auto n1 = colors_of(g, complement_labeling(f), what + " complement").size();
    require(n0 == n1, what + ": complement changes the colour count");
  };
  for (int m = 4; m <= 30; m += 2) {
    for (int a = 3; 2 * a < m; a += 2) {
      if (gcd(a, m) != 1) continue;
      const auto lg = circulant_labeling({m, {1, a}});
      complement_keeps(lg.graph, lg.labeling, "C_" + std::to_string(m));
      ++regular;
    }
  }
  for (int c = 1; c <= 8; ++c) {
    for (int k = 2; k <= 4; ++k) {
      const auto t = transform_cycle(case_order(c, k), case_plan(c, k));
      if (t.graph.is_regular()) {
        complement_keeps(t.graph, t.labeling, "case " + std::to_string(c));
        ++regular;
      } else {
        require(check_nonreg_conditions(t.graph, t.labeling), "case " + std::to_string(c) + ": conditions fail");
        complement_keeps(t.graph, t.labeling, "case " + std::to_string(c));
        ++nonreg;
      }
    }
  }
  for (int s : {2, 3}) {
    for (int t : {0, 1}) {
      const auto cm = build_construction_matrix(s, t);
      complement_keeps(cm.circulant_labeled.graph, cm.circulant_labeled.labeling, "matrix");
      ++regular;
    }
  }
  std::vector<LabeledGraph> twos;
  for (int r : {3, 5, 9, 13}) {
    const auto u = union_2labeling_family1(r);
    twos.push_back({u.graph, u.labeling});
  }
  for (int r : {5, 7, 9, 17}) {
    const auto u = union_2labeling_family2(r);
    twos.push_back({u.graph, u.labeling});
  }
  {
    const auto u = union_2labeling_family1(9);
    twos.push_back(transform_union(u, paired_directives(u.spec)));
  }
  for (const auto& lg : twos) {
    require(colors_of(lg.graph, lg.labeling, "two-colour output").size() == 2, "not 2 colours");
    require(two_color_identity_holds(lg.graph, lg.labeling), "xX = yY = q(q+1)/2 fails");
    ++two;
  }
  return std::to_string(regular) + " regular, " + std::to_string(nonreg) + " non-regular, " + std::to_string(two) +
         " two-colour labelings";
}

using Runner = std::string (*)(const ReproduceOptions&);

struct Entry {
  int id;
  const char* title;
  Runner run;
};

const Entry kEntries[] = {
    {1, "C-labeling of C_m has colours {floor(m/2)+2, m+1, m+2}, m=3..200", c1},
    {2, "even circulants: 3 colours from the closed forms", c2},
    {3, "labeling matrices of C_16(1,3) and C_16(1,7)", c3},
    {4, "C_16 spectra and multiplier isomorphisms", c4},
    {5, "cycle merge cases 1-8, k=2..6", c5},
    {6, "Case 1 graph is C_4k(1,2k-1)", c6},
    {7, "matrix construction for s in {2,3}, t in {0,1,2}", c7},
    {8, "one-point union labelings and transforms", c8},
    {9, "exhaustive oracle ground truth", c9},
    {10, "complement and two-colour identities", c10},
};

CriterionResult run_entry(const Entry& e, const ReproduceOptions& o) {
  CriterionResult res{e.id, e.title, Status::Fail, "", 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    res.detail = e.run(o);
    res.status = Status::Pass;
  } catch (const Skip& s) {
    res.status = Status::Skipped;
    res.detail = s.what();
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::OverBudget) {
      res.status = Status::Skipped;
    }
    res.detail = err.what();
  } catch (const std::exception& ex) {
    res.detail = ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

std::vector<CriterionResult> reproduce_all(const ReproduceOptions& options) {
  std::vector<const Entry*> chosen;
  for (const auto& e : kEntries) {
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), e.id) != options.only.end()) {
      chosen.push_back(&e);
    }
  }
  std::vector<CriterionResult> out;
  if (options.parallel) {
    std::vector<std::future<CriterionResult>> futs;
    for (const auto* e : chosen) futs.push_back(std::async(std::launch::async, run_entry, std::cref(*e), std::cref(options)));
    for (auto& f : futs) out.push_back(f.get());
  } else {
    for (const auto* e : chosen) out.push_back(run_entry(*e, options));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == Status::Fail; });
}

std::string render_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    os << "[" << to_string(r.status) << "] " << r.id << ". " << r.title << " (" << secs << "): " << r.detail << '\n';
  }
  return os.str();
}

}  // namespace antimagic
