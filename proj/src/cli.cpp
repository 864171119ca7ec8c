#include "antimagic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "antimagic/circulant.hpp"
#include "antimagic/cycle_transform.hpp"
#include "antimagic/error.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/reproduce.hpp"
#include "antimagic/union_transform.hpp"

namespace antimagic::cli {

namespace {

using nlohmann::json;

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::vector<Sum> set_of(std::initializer_list<Sum> v) {
  std::vector<Sum> s(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string braces(const std::vector<Sum>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

Document labeled_doc(std::string name, const Graph& g, const EdgeLabeling& f) {
  Document d;
  d.name = std::move(name);
  d.graph = g;
  d.labeling = f;
  return d;
}

Document union_doc(const LabeledUnion& u, bool labeled) {
  Document d;
  d.name = u.spec.name();
  d.graph = u.graph;
  if (labeled) d.labeling = u.labeling;
  d.construction = {{"type", "union"}, {"orders", u.spec.orders}};
  return d;
}

std::vector<CycleDirective> directives_for(const std::string& mode, const UnionSpec& spec) {
  if (mode == "paired") return paired_directives(spec);
  if (mode == "case") return case_directives(spec);
  if (mode == "keep") return std::vector<CycleDirective>(spec.cycle_count(), KeepCycle{});
  throw Error(ErrorKind::InvalidInput, "unknown directive mode " + mode);
}

// Re-evaluates a document: bijection, local antimagic property, and whatever
// the "checks" object asks for.
int verify(const Document& doc, std::ostream& out) {
  if (!doc.labeling) throw CheckFailed("document has no labeling");
  const Graph& g = doc.graph;
  const EdgeLabeling& f = *doc.labeling;
  out << (doc.name.empty() ? "graph" : doc.name) << ": " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges\n";
  require_bijection(g, f);
  out << "bijection onto 1.." << g.edge_count() << ": ok\n";
  const auto c = induced_coloring(g, f);
  if (!c.conflicts.empty()) {
    const auto [u, v] = c.conflicts.front();
    throw CheckFailed("adjacent vertices " + g.vertex_name(u) + " and " + g.vertex_name(v) + " share sum " +
                      std::to_string(c.sums[u]));
  }
  out << "local antimagic: ok\n";
  out << "colours " << c.colors.size() << ": " << braces(c.colors) << '\n';
  const auto& ch = doc.checks;
  if (ch.contains("colors")) {
    auto want = ch["colors"].get<std::vector<Sum>>();
    std::sort(want.begin(), want.end());
    if (want != c.colors) throw CheckFailed("expected colours " + braces(want) + ", got " + braces(c.colors));
    out << "check colours " << braces(want) << ": ok\n";
  }
  if (ch.contains("color_count")) {
    const auto k = ch["color_count"].get<std::size_t>();
    if (k != c.colors.size()) throw CheckFailed("expected " + std::to_string(k) + " colours");
    out << "check colour count " << k << ": ok\n";
  }
  if (ch.contains("central_sum")) {
    const auto s = ch["central_sum"].get<Sum>();
    if (c.sums.at(0) != s) throw CheckFailed("central sum " + std::to_string(c.sums[0]) + ", expected " + std::to_string(s));
    out << "check central sum " << s << ": ok\n";
  }
  if (ch.contains("central_min")) {
    const auto s = ch["central_min"].get<Sum>();
    if (c.sums.at(0) < s) throw CheckFailed("central sum below " + std::to_string(s));
    out << "check central sum >= " << s << ": ok\n";
  }
  if (ch.contains("two_color_identity")) {
    if (!two_color_identity_holds(g, f)) throw CheckFailed("xX = yY = q(q+1)/2 fails");
    out << "check xX = yY = q(q+1)/2: ok\n";
  }
  if (doc.construction.value("type", "") == "matrix") {
    const auto& k = doc.construction;
    out << "matrix sums: columns " << k["col_sums"][0] << ", rows " << k["row_sums"][1] << ", first row "
        << k["row_sums"][0] << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local antimagic labelings: constructions, transforms and exhaustive checks", "antimagic"};
  app.require_subcommand(1);
  std::function<int()> action;

  // build
  auto* build = app.add_subcommand("build", "Unlabeled graphs as JSON");
  build->require_subcommand(1);
  int b_m = 0, b_n = 0;
  std::vector<int> b_steps, b_orders;
  auto* b_cycle = build->add_subcommand("cycle", "C_m");
  b_cycle->add_option("--m", b_m, "order")->required();
  b_cycle->callback([&] { action = [&] { Document d; d.name = "C_" + std::to_string(b_m); d.graph = build_cycle(b_m);
                                         out << dump_document(d); return 0; }; });
  auto* b_path = build->add_subcommand("path", "P_n");
  b_path->add_option("--n", b_n, "vertex count")->required();
  b_path->callback([&] { action = [&] { Document d; d.name = "P_" + std::to_string(b_n); d.graph = build_path(b_n);
                                        out << dump_document(d); return 0; }; });
  auto* b_circ = build->add_subcommand("circulant", "C_m(a_0, ..., a_t)");
  b_circ->add_option("--m", b_m, "modulus")->required();
  b_circ->add_option("--steps", b_steps, "steps")->required()->delimiter(',');
  b_circ->callback([&] { action = [&] { const CirculantSpec spec{b_m, b_steps}; Document d; d.name = spec.name();
                                        d.graph = build_circulant(spec); out << dump_document(d); return 0; }; });
  auto* b_union = build->add_subcommand("union", "one-point union of cycles");
  b_union->add_option("--orders", b_orders, "cycle orders")->required()->delimiter(',');
  b_union->callback([&] { action = [&] { out << dump_document(union_doc(build_union(UnionSpec{b_orders}), false));
                                         return 0; }; });

  // label
  auto* label = app.add_subcommand("label", "Labeled graphs with expected checks");
  label->require_subcommand(1);
  int l_m = 0, l_r = 0;
  std::vector<int> l_steps, l_orders;
  auto* l_c = label->add_subcommand("c", "C-labeling of C_m");
  l_c->add_option("--m", l_m, "order")->required();
  l_c->callback([&] {
    action = [&] {
      auto d = labeled_doc("C_" + std::to_string(l_m), build_cycle(l_m), c_labeling(l_m));
      d.checks["colors"] = set_of({l_m / 2 + 2, l_m + 1, l_m + 2});
      out << dump_document(d);
      return 0;
    };
  });
  auto* l_circ = label->add_subcommand("circulant", "translated C-labelings on C_m(1, a_1, ..., a_t)");
  l_circ->add_option("--m", l_m, "modulus")->required();
  l_circ->add_option("--steps", l_steps, "steps, starting with 1")->required()->delimiter(',');
  l_circ->callback([&] {
    action = [&] {
      const CirculantSpec spec{l_m, l_steps};
      const auto lg = circulant_labeling(spec);
      auto d = labeled_doc(spec.name(), lg.graph, lg.labeling);
      const auto cf = circulant_closed_forms(l_m, static_cast<int>(l_steps.size()) - 1);
      d.checks["colors"] = set_of({cf.hub, cf.odd, cf.even});
      out << dump_document(d);
      return 0;
    };
  });
  auto* l_u2a = label->add_subcommand("union2a", "2-colour labeling of U((4r-2)^[r-1], 2r-2)");
  l_u2a->add_option("--r", l_r, "r >= 3")->required();
  l_u2a->callback([&] {
    action = [&] {
      auto d = union_doc(union_2labeling_family1(l_r), true);
      const Sum r = l_r;
      d.checks = {{"colors", set_of({4 * r * r - 4 * r + 1, 4 * r * r - 2 * r})},
                  {"central_sum", 4 * r * r - 2 * r},
                  {"two_color_identity", true}};
      out << dump_document(d);
      return 0;
    };
  });
  auto* l_u2b = label->add_subcommand("union2b", "2-colour labeling of U((2r)^[(r-1)/2], (2r-2)^[(r+1)/2])");
  l_u2b->add_option("--r", l_r, "odd r >= 5")->required();
  l_u2b->callback([&] {
    action = [&] {
      auto d = union_doc(union_2labeling_family2(l_r), true);
      const Sum r = l_r;
      d.checks = {{"colors", set_of({2 * r * r - r, 2 * r * r + r})},
                  {"central_sum", 2 * r * r + r},
                  {"two_color_identity", true}};
      out << dump_document(d);
      return 0;
    };
  });
  auto* l_u3 = label->add_subcommand("union3", "3-colour labeling of a union with orders >= 16");
  l_u3->add_option("--orders", l_orders, "cycle orders")->required()->delimiter(',');
  l_u3->callback([&] {
    action = [&] {
      const auto u = union_3labeling(UnionSpec{l_orders});
      auto d = union_doc(u, true);
      d.checks = {{"color_count", 3}, {"central_min", 2 * u.spec.size() + 16}};
      out << dump_document(d);
      return 0;
    };
  });

  // transform
  auto* transform = app.add_subcommand("transform", "Label-preserving merges");
  transform->require_subcommand(1);
  int t_case = 0, t_k = 0, t_s = 0, t_t = 0, t_r = 0, t_family = 0;
  std::vector<int> t_orders;
  std::string t_mode = "paired";
  bool t_circulant = false;
  auto* t_c = transform->add_subcommand("case", "merge C_n along case plan 1..8");
  t_c->add_option("--case", t_case, "case number")->required()->check(CLI::Range(1, 8));
  t_c->add_option("--k", t_k, "k >= 2")->required();
  t_c->callback([&] {
    action = [&] {
      const auto plan = case_plan(t_case, t_k);
      const auto t = transform_cycle(plan.n, plan);
      auto d = labeled_doc("case " + std::to_string(t_case) + " k=" + std::to_string(t_k), t.graph, t.labeling);
      d.checks["colors"] = t.expected_colors;
      d.construction = {{"type", "case"}, {"case", t_case}, {"k", t_k}, {"n", plan.n},
                        {"family", family_name(t.family)}, {"blocks", plan.blocks}};
      out << dump_document(d);
      return 0;
    };
  });
  auto* t_m = transform->add_subcommand("matrix", "even/odd array construction, n = 2^(2s-1)(t+2)");
  t_m->add_option("--s", t_s, "s >= 2")->required();
  t_m->add_option("--t", t_t, "t >= 0")->required();
  t_m->add_flag("--circulant", t_circulant, "emit the labeled circulant instead of the merged cycle");
  t_m->callback([&] {
    action = [&] {
      const auto cm = build_construction_matrix(t_s, t_t);
      const auto& lg = t_circulant ? cm.circulant_labeled : cm.merged;
      auto d = labeled_doc(t_circulant ? cm.circulant.name() : "C_" + std::to_string(cm.arrays.n) + " merged", lg.graph,
                           lg.labeling);
      std::vector<Sum> colors(cm.row_sums);
      colors.insert(colors.end(), cm.col_sums.begin(), cm.col_sums.end());
      std::sort(colors.begin(), colors.end());
      colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
      d.checks["colors"] = colors;
      d.construction = {{"type", "matrix"}, {"s", t_s}, {"t", t_t}, {"n", cm.arrays.n},
                        {"row_sums", cm.row_sums}, {"col_sums", cm.col_sums}, {"circulant", cm.circulant.name()},
                        {"a", cm.arrays.a}, {"b", cm.arrays.b}};
      out << dump_document(d);
      return 0;
    };
  });
  auto* t_u = transform->add_subcommand("union", "transform every cycle of a labeled union");
  t_u->add_option("--family", t_family, "1, 2 (two-colour families) or 3 (generic)")->required()->check(
      CLI::Range(1, 3));
  t_u->add_option("--r", t_r, "r for families 1 and 2");
  t_u->add_option("--orders", t_orders, "orders for family 3")->delimiter(',');
  t_u->add_option("--directives", t_mode, "paired | case | keep")->check(CLI::IsMember({"paired", "case", "keep"}));
  t_u->callback([&] {
    action = [&] {
      LabeledUnion u;
      if (t_family == 1) u = union_2labeling_family1(t_r);
      else if (t_family == 2) u = union_2labeling_family2(t_r);
      else u = union_3labeling(UnionSpec{t_orders});
      const auto dirs = directives_for(t_mode, u.spec);
      const auto t = transform_union(u, dirs);
      auto d = labeled_doc(u.spec.name() + " transformed", t.graph, t.labeling);
      json described = json::array();
      for (const auto& x : dirs) described.push_back(describe(x));
      d.construction = {{"type", "union-transform"}, {"orders", u.spec.orders}, {"directives", described}};
      if (t_family == 1 && t_mode == "paired") {
        const Sum r = t_r;
        d.checks["colors"] = set_of({2 * (4 * r * r - 4 * r + 1), 2 * (4 * r * r - 2 * r)});
      }
      out << dump_document(d);
      return 0;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "re-verify a labeled JSON document");
  std::string v_path;
  ver->add_option("file", v_path, "document (default stdin)");
  ver->callback([&] { action = [&] { return verify(parse_document(read_input(v_path, in)), out); }; });

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "circulant eigenvalues");
  int s_m = 0;
  std::vector<int> s_steps, s_compare;
  spec_cmd->add_option("--m", s_m, "modulus")->required();
  spec_cmd->add_option("--steps", s_steps, "steps")->required()->delimiter(',');
  spec_cmd->add_option("--compare", s_compare, "second step set")->delimiter(',');
  spec_cmd->callback([&] {
    action = [&] {
      const auto x = circulant_spectrum({s_m, s_steps});
      out << std::fixed << std::setprecision(9);
      for (int j = 0; j < s_m; ++j) out << "lambda_" << j << " = " << (std::abs(x[j]) < 1e-12 ? 0.0 : x[j]) << '\n';
      if (!s_compare.empty()) {
        const bool same = same_spectrum(x, circulant_spectrum({s_m, s_compare}));
        out << (same ? "same" : "different") << " spectrum\n";
      }
      return 0;
    };
  });

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism of two circulants on Z_m");
  int i_m = 0, i_mult = 0;
  std::vector<int> i_from, i_to;
  iso->add_option("--m", i_m, "modulus")->required();
  iso->add_option("--from", i_from, "steps")->required()->delimiter(',');
  iso->add_option("--to", i_to, "steps")->required()->delimiter(',');
  iso->add_option("--mult", i_mult, "certify i -> b*i");
  iso->callback([&] {
    action = [&] {
      const CirculantSpec a{i_m, i_from}, b{i_m, i_to};
      if (i_mult != 0) {
        if (!certify_multiplier(i_m, i_from, i_to, i_mult)) {
          throw CheckFailed("i -> " + std::to_string(i_mult) + "i does not carry " + a.name() + " onto " + b.name());
        }
        out << "i -> " << i_mult << "i certifies " << a.name() << " = " << b.name() << '\n';
        return 0;
      }
      const auto phi = are_isomorphic(build_circulant(a), build_circulant(b));
      if (!phi) throw CheckFailed(a.name() + " and " + b.name() + " are not isomorphic");
      out << a.name() << " = " << b.name() << " via";
      for (int v : *phi) out << ' ' << v;
      out << '\n';
      return 0;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->require_subcommand(1);
  auto* chi = oracle->add_subcommand("chi-la", "exact local antimagic chromatic number");
  std::string o_path;
  int o_max = -1, o_colors = 0, o_threads = 1;
  chi->add_option("file", o_path, "graph document (default stdin)");
  chi->add_option("--max-edges", o_max, "edge budget");
  chi->add_option("--colors", o_colors, "only decide whether k colours suffice");
  chi->add_option("--threads", o_threads, "worker threads");
  chi->callback([&] {
    action = [&] {
      const auto doc = parse_document(read_input(o_path, in));
      auto budget = SearchBudget::from_env();
      if (o_max >= 0) budget.max_edges = o_max;
      budget.threads = o_threads;
      const auto res = o_colors > 0 ? feasible_with_colors(doc.graph, o_colors, budget) : exact_chi_la(doc.graph, budget);
      if (o_colors > 0) {
        out << (res.witness ? "feasible" : "infeasible") << " with " << o_colors << " colours\n";
      } else {
        out << "chi_la = " << *res.chi_la << '\n';
      }
      if (res.witness) {
        out << "witness:";
        for (int l : res.witness->labels) out << ' ' << l;
        out << '\n';
      }
      out << "nodes = " << res.nodes << "\nseconds = " << res.seconds << '\n';
      return 0;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "convert a document");
  std::string e_format, e_path;
  exp->add_option("format", e_format, "json | dot | matrix")->required()->check(CLI::IsMember({"json", "dot", "matrix"}));
  exp->add_option("file", e_path, "document (default stdin)");
  exp->callback([&] {
    action = [&] {
      const auto doc = parse_document(read_input(e_path, in));
      if (e_format == "json") {
        out << to_json(doc).dump(2) << '\n';
      } else if (e_format == "dot") {
        out << to_dot(doc.graph, doc.labeling ? &*doc.labeling : nullptr);
      } else {
        if (doc.construction.value("type", "") == "matrix") {
          out << render_construction_matrix(
              build_construction_matrix(doc.construction["s"].get<int>(), doc.construction["t"].get<int>()));
        } else {
          if (!doc.labeling) throw Error(ErrorKind::InvalidInput, "matrix export needs a labeling");
          out << render_matrix(labeling_matrix_view(doc.graph, *doc.labeling));
        }
      }
      return 0;
    };
  });

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "run the acceptance suite");
  std::vector<int> r_only;
  bool r_parallel = false;
  std::string r_golden;
  rep->add_option("--only", r_only, "criterion ids")->delimiter(',');
  rep->add_flag("--parallel", r_parallel, "run criteria concurrently");
  rep->add_option("--golden-dir", r_golden, "directory with the reference matrices");
  rep->callback([&] {
    action = [&] {
      ReproduceOptions opt;
      opt.only = r_only;
      opt.parallel = r_parallel;
      opt.golden_dir = r_golden;
      const auto results = reproduce_all(opt);
      out << render_report(results);
      return all_passed(results) ? 0 : 1;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    return action();
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace antimagic::cli
