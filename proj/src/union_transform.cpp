#include "antimagic/union_transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "antimagic/cycle_transform.hpp"
#include "antimagic/error.hpp"

namespace antimagic {

void UnionSpec::validate() const {
  if (orders.size() < 2) throw Error(ErrorKind::InvalidSpec, "a one-point union needs at least two cycles");
  for (int a : orders) {
    if (a < 3) throw Error(ErrorKind::InvalidOrder, "cycle order " + std::to_string(a) + " < 3");
  }
}

int UnionSpec::size() const { return std::accumulate(orders.begin(), orders.end(), 0); }

int UnionSpec::edge_offset(int i) const {
  if (i < 0 || i > cycle_count()) throw Error(ErrorKind::OutOfRange, "cycle index " + std::to_string(i));
  return std::accumulate(orders.begin(), orders.begin() + i, 0);
}

std::string UnionSpec::name() const {
  std::string s = "U(";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
  return s + ")";
}

LabeledUnion build_union(const UnionSpec& spec) {
  spec.validate();
  LabeledUnion u;
  u.spec = spec;
  std::vector<Graph> cycles;
  for (int a : spec.orders) cycles.push_back(build_cycle(a));
  const std::vector<int> attach(cycles.size(), 0);
  u.graph = one_point_union(cycles, attach);
  int next = 1;
  for (int a : spec.orders) {
    std::vector<int> local(a, 0);
    for (int p = 1; p < a; ++p) local[p] = next++;
    u.cycle_vertices.push_back(std::move(local));
  }
  return u;
}

namespace {

void expect_label(int got, int want, const char* where) {
  if (got != want) {
    throw Error(ErrorKind::ConstructionFailure, std::string(where) + ": closing label " + std::to_string(got) +
                                                    ", expected " + std::to_string(want));
  }
}

void append(LabeledUnion& u, const std::vector<int>& seq) {
  u.labeling.labels.insert(u.labeling.labels.end(), seq.begin(), seq.end());
}

}  // namespace

LabeledUnion union_2labeling_family1(int r) {
  if (r < 3) throw Error(ErrorKind::OutOfRange, "family 1 needs r >= 3");
  UnionSpec spec;
  spec.orders.assign(r - 1, 4 * r - 2);
  spec.orders.push_back(2 * r - 2);
  LabeledUnion u = build_union(spec);
  const int top = 4 * r * r - 4 * r + 1;
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<int> seq;
    for (int p = 0; p < 4 * r - 2; ++p) {
      const int l = p / 2;
      seq.push_back(p % 2 == 0 ? l * (2 * r - 1) + i : top - l * (2 * r - 1) - i);
    }
    expect_label(seq[4 * r - 4], 4 * r * r - 6 * r + 2 + i, "family 1 copy");
    expect_label(seq[4 * r - 3], 2 * r - 1 - i, "family 1 copy");
    append(u, seq);
  }
  std::vector<int> seq;
  for (int p = 0; p < 2 * r - 2; ++p) {
    const int l = p / 2;
    seq.push_back(p % 2 == 0 ? (l + 1) * (2 * r - 1) : 4 * r * r - 6 * r + 2 - l * (2 * r - 1));
  }
  expect_label(seq[2 * r - 4], 2 * r * r - 3 * r + 1, "family 1 short cycle");
  expect_label(seq[2 * r - 3], 2 * r * r - r, "family 1 short cycle");
  append(u, seq);
  require_bijection(u.graph, u.labeling);
  return u;
}

LabeledUnion union_2labeling_family2(int r) {
  if (r % 2 == 0) throw Error(ErrorKind::Precondition, "family 2 needs r odd");
  if (r < 5) throw Error(ErrorKind::OutOfRange, "family 2 needs r >= 5");
  UnionSpec spec;
  spec.orders.assign((r - 1) / 2, 2 * r);
  spec.orders.insert(spec.orders.end(), (r + 1) / 2, 2 * r - 2);
  LabeledUnion u = build_union(spec);
  const int rr = 2 * r * r;
  for (int i = 1; i <= (r - 1) / 2; ++i) {
    std::vector<int> seq;
    for (int p = 0; p < 2 * r; ++p) {
      if (p <= r) {
        const int l = p / 2;
        seq.push_back(p % 2 == 0 ? 2 * r * l + i : rr - r - 2 * r * l - i);
      } else {
        const int d = 2 * r - 1 - p;
        const int e = d / 2;
        seq.push_back(d % 2 == 0 ? (2 * e + 1) * r - i : rr - 2 * r * (e + 1) + i);
      }
    }
    expect_label(seq[r - 1], r * r - r + i, "family 2 long copy");
    expect_label(seq[r], r * r - i, "family 2 long copy");
    expect_label(seq[2 * r - 2], rr - 2 * r + i, "family 2 long copy");
    expect_label(seq[2 * r - 1], r - i, "family 2 long copy");
    append(u, seq);
  }
  for (int j = 0; j <= (r - 1) / 2; ++j) {
    std::vector<int> seq;
    for (int p = 0; p < 2 * r - 2; ++p) {
      if (p <= r - 1) {
        const int l = p / 2;
        seq.push_back(p % 2 == 0 ? (2 * l + 1) * r + j : rr - 2 * r * (l + 1) - j);
      } else {
        const int d = 2 * r - 3 - p;
        const int e = d / 2;
        seq.push_back(d % 2 == 0 ? (2 * e + 2) * r - j : rr - (2 * e + 3) * r + j);
      }
    }
    expect_label(seq[r - 2], r * r + r - j, "family 2 short copy");
    expect_label(seq[r - 1], r * r + j, "family 2 short copy");
    expect_label(seq[2 * r - 4], rr - 3 * r + j, "family 2 short copy");
    expect_label(seq[2 * r - 3], 2 * r - j, "family 2 short copy");
    append(u, seq);
  }
  require_bijection(u.graph, u.labeling);
  return u;
}

LabeledUnion union_3labeling(const UnionSpec& spec) {
  spec.validate();
  for (int a : spec.orders) {
    if (a < 16) throw Error(ErrorKind::Precondition, "3-labeling needs every order >= 16, got " + std::to_string(a));
  }
  LabeledUnion u = build_union(spec);
  const int m = spec.size();
  for (int i = 1; i <= m; ++i) u.labeling.labels.push_back(i % 2 == 0 ? i / 2 : m - (i - 1) / 2);
  require_bijection(u.graph, u.labeling);
  return u;
}

std::string describe(const CycleDirective& d) {
  struct V {
    std::string operator()(const KeepCycle&) const { return "keep"; }
    std::string operator()(const MergeCycle& m) const { return "merge(" + std::to_string(m.plan.blocks.size()) + " blocks)"; }
    std::string operator()(const RewireCycles& w) const {
      std::string s = "rewire(";
      for (std::size_t i = 0; i < w.partners.size(); ++i) {
        s += (i ? "," : "") + std::to_string(w.partners[i].first) + "@" + std::to_string(w.partners[i].second);
      }
      return s + ")";
    }
    std::string operator()(const MatrixMerge& x) const {
      return "matrix(s=" + std::to_string(x.s) + ",t=" + std::to_string(x.t) + ")";
    }
  };
  return std::visit(V{}, d);
}

LabeledGraph transform_union(const LabeledUnion& u, const std::vector<CycleDirective>& directives) {
  const int r = u.spec.cycle_count();
  if (static_cast<int>(directives.size()) != r) {
    throw Error(ErrorKind::InvalidInput, "need one directive per cycle (" + std::to_string(r) + ")");
  }
  require_bijection(u.graph, u.labeling);
  const Graph& g = u.graph;
  const int nv = g.vertex_count();

  // Rewiring: partner vertices are sent onto the host.
  std::vector<int> to(nv);
  std::iota(to.begin(), to.end(), 0);
  std::vector<int> partner_of(r, -1);
  for (int h = 0; h < r; ++h) {
    const auto* w = std::get_if<RewireCycles>(&directives[h]);
    if (!w) continue;
    const int n = u.spec.orders[h];
    for (const auto& [partner, step] : w->partners) {
      if (partner < 0 || partner >= r || partner == h) throw Error(ErrorKind::InvalidInput, "bad partner cycle");
      if (partner_of[partner] != -1) throw Error(ErrorKind::InvalidInput, "cycle rewired twice");
      if (!std::holds_alternative<KeepCycle>(directives[partner])) {
        throw Error(ErrorKind::InvalidInput, "partner cycle " + std::to_string(partner) + " must be kept");
      }
      if (u.spec.orders[partner] != n) throw Error(ErrorKind::InvalidOrder, "rewired cycles differ in order");
      if (step <= 1 || 2 * step >= n) throw Error(ErrorKind::UnsupportedStep, "step must lie in (1, n/2)");
      if (gcd(step, n) != 1) {
        throw Error(ErrorKind::UnsupportedStep, "step " + std::to_string(step) + " not coprime to " + std::to_string(n));
      }
      partner_of[partner] = h;
      for (int p = 1; p < n; ++p) {
        to[u.cycle_vertices[partner][p]] = u.cycle_vertices[h][static_cast<int>((1LL * p * step) % n)];
      }
    }
  }
  for (int h = 0; h < r; ++h) {
    if (partner_of[h] != -1 && std::holds_alternative<RewireCycles>(directives[h])) {
      throw Error(ErrorKind::InvalidInput, "a host cannot itself be rewired");
    }
  }

  // Compact surviving vertices.
  std::vector<int> compact(nv, -1);
  int kept = 0;
  for (int v = 0; v < nv; ++v) {
    if (to[v] == v) compact[v] = kept++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({compact[to[e.u]], compact[to[e.v]]});
  std::vector<std::vector<int>> prov(kept);
  for (int v = 0; v < nv; ++v) {
    const auto& p = g.provenance(v);
    auto& dst = prov[compact[to[v]]];
    dst.insert(dst.end(), p.begin(), p.end());
  }
  for (auto& p : prov) std::sort(p.begin(), p.end());
  const Graph rewired(kept, std::move(edges), std::move(prov));

  // Merge blocks, lifted to global vertices.
  std::vector<int> owner(kept, -1);
  std::vector<std::vector<int>> blocks;
  blocks.push_back({0});
  owner[0] = 0;
  auto lift = [&](int cycle, const MergePlan& plan) {
    if (plan.n != u.spec.orders[cycle]) {
      throw Error(ErrorKind::InvalidPlan, "plan order " + std::to_string(plan.n) + " on a cycle of order " +
                                              std::to_string(u.spec.orders[cycle]));
    }
    plan.validate();
    for (const auto& block : plan.blocks) {
      const bool central = std::find(block.begin(), block.end(), 0) != block.end();
      std::vector<int> global;
      for (int p : block) {
        if (p != 0) global.push_back(compact[u.cycle_vertices[cycle][p]]);
      }
      if (central) {
        blocks[0].insert(blocks[0].end(), global.begin(), global.end());
        for (int v : global) owner[v] = 0;
      } else {
        for (int v : global) owner[v] = static_cast<int>(blocks.size());
        blocks.push_back(std::move(global));
      }
    }
  };
  for (int c = 0; c < r; ++c) {
    if (const auto* m = std::get_if<MergeCycle>(&directives[c])) {
      lift(c, m->plan);
    } else if (const auto* x = std::get_if<MatrixMerge>(&directives[c])) {
      const auto arrays = build_even_odd_arrays(x->s, x->t);
      if (arrays.n != u.spec.orders[c]) {
        throw Error(ErrorKind::InvalidOrder, "matrix directive needs order " + std::to_string(arrays.n));
      }
      lift(c, matrix_merge_plan(arrays));
    }
  }
  for (int v = 0; v < kept; ++v) {
    if (owner[v] == -1) blocks.push_back({v});
  }
  LabeledGraph out;
  out.graph = merge_vertices(rewired, std::span<const std::vector<int>>(blocks));
  out.labeling = u.labeling;
  return out;
}

std::vector<CycleDirective> case_directives(const UnionSpec& spec) {
  std::vector<CycleDirective> out;
  for (int a : spec.orders) {
    if (auto id = case_for_order(a)) out.push_back(MergeCycle{case_plan(*id)});
    else out.push_back(KeepCycle{});
  }
  return out;
}

std::vector<CycleDirective> paired_directives(const UnionSpec& spec) {
  const int r = spec.cycle_count();
  std::vector<CycleDirective> out(r, KeepCycle{});
  std::vector<bool> used(r, false);
  for (int h = 0; h < r; ++h) {
    if (used[h]) continue;
    used[h] = true;
    const int n = spec.orders[h];
    int step = -1;
    for (int a = 2; 2 * a < n; ++a) {
      if (gcd(a, n) == 1) {
        step = a;
        break;
      }
    }
    int partner = -1;
    if (step > 0) {
      for (int c = h + 1; c < r; ++c) {
        if (!used[c] && spec.orders[c] == n) {
          partner = c;
          break;
        }
      }
    }
    if (partner >= 0) {
      used[partner] = true;
      out[h] = RewireCycles{{{partner, step}}};
    } else if (auto id = case_for_order(n)) {
      out[h] = MergeCycle{case_plan(*id)};
    }
  }
  return out;
}

}  // namespace antimagic
