#include "antimagic/cycle_transform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "antimagic/circulant.hpp"
#include "antimagic/error.hpp"

namespace antimagic {

namespace {

constexpr int kCaseResidue[9] = {0, 0, 4, 2, 6, 1, 5, 3, 7};

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ConstructionFailure, what); }

}  // namespace

int case_order(int case_number, int k) {
  if (case_number < 1 || case_number > 8) throw Error(ErrorKind::InvalidInput, "case number must be 1..8");
  return 8 * k + kCaseResidue[case_number];
}

int CasePlanId::order() const { return case_order(case_number, k); }

std::optional<CasePlanId> case_for_order(int n) {
  const int k = n / 8;
  if (k < 2) return std::nullopt;
  for (int c = 1; c <= 8; ++c) {
    if (kCaseResidue[c] == n % 8) return CasePlanId{c, k};
  }
  return std::nullopt;
}

MergePlan case_plan(int case_number, int k) {
  if (case_number < 1 || case_number > 8) throw Error(ErrorKind::InvalidInput, "case number must be 1..8");
  if (k < 2) throw Error(ErrorKind::OutOfRange, "case plans need k >= 2, got " + std::to_string(k));
  MergePlan plan;
  plan.n = case_order(case_number, k);
  auto pair = [&plan](int x, int y, BlockKind kind) {
    plan.blocks.push_back({x, y});
    plan.kinds.push_back(kind);
  };
  auto special = [&plan](std::vector<int> block) {
    plan.blocks.push_back(std::move(block));
    plan.kinds.push_back(BlockKind::C);
  };
  const auto A = BlockKind::A;
  const auto B = BlockKind::B;
  switch (case_number) {
    case 1:
      for (int i = 0; i <= 2 * k - 1; ++i) pair(2 * i, 4 * k + 2 * i, A);
      for (int j = 0; j <= k - 1; ++j) pair(2 * j + 1, 2 * k + 2 * j + 1, B);
      for (int j = 2 * k; j <= 3 * k - 1; ++j) pair(2 * j + 1, 2 * k + 2 * j + 1, B);
      break;
    case 2:
      for (int i = 0; i <= 2 * k; ++i) pair(2 * i, 4 * k + 2 * i + 2, A);
      for (int j = 0; j <= k; ++j) pair(2 * j + 1, 2 * k + 2 * j + 3, B);
      for (int j = 0; j <= k - 1; ++j) pair(4 * k + 2 * j + 5, 6 * k + 2 * j + 5, B);
      break;
    case 3:
      for (int i = 1; i <= 2 * k; ++i) pair(2 * i, 4 * k + 2 * i, A);
      for (int j = 0; j <= 2 * k - 1; ++j) pair(2 * j + 1, 4 * k + 2 * j + 3, B);
      special({0, 4 * k + 1});
      break;
    case 4:
      for (int i = 1; i <= 2 * k + 1; ++i) pair(2 * i, 4 * k + 2 + 2 * i, A);
      for (int j = 0; j <= k; ++j) pair(2 * j + 1, 6 * k + 5 + 2 * j, B);
      for (int j = 0; j <= k - 1; ++j) pair(2 * k + 3 + 2 * j, 4 * k + 5 + 2 * j, B);
      special({0, 4 * k + 3});
      break;
    case 5:
      for (int i = 1; i <= 2 * k; ++i) pair(2 * i, 4 * k + 2 * i, A);
      for (int j = 0; j <= k - 1; ++j) pair(2 * j + 1, 2 * k + 2 * j + 1, B);
      for (int j = 0; j <= k - 1; ++j) pair(4 * k + 2 * j + 1, 6 * k + 2 * j + 1, B);
      special({0});
      break;
    case 6:
      for (int i = 1; i <= 2 * k + 1; ++i) pair(2 * i, 4 * k + 2 + 2 * i, A);
      for (int j = 0; j <= k; ++j) pair(2 * j + 1, 6 * k + 3 + 2 * j, B);
      for (int j = 0; j <= k - 1; ++j) pair(2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j, B);
      special({0});
      break;
    case 7:
      for (int i = 1; i <= k; ++i) pair(2 * i, 4 * k + 2 * i, A);
      for (int i = 1; i <= k; ++i) pair(2 * k + 2 * i, 6 * k + 2 + 2 * i, A);
      for (int j = 0; j <= k - 1; ++j) pair(2 * j + 1, 8 * k + 1 - 2 * j, B);
      for (int j = 0; j <= k - 1; ++j) pair(2 * k + 3 + 2 * j, 4 * k + 3 + 2 * j, B);
      special({0, 2 * k + 1, 6 * k + 2});
      break;
    case 8:
      for (int i = 1; i <= k; ++i) pair(2 * i, 4 * k + 4 + 2 * i, A);
      for (int i = 1; i <= k + 1; ++i) pair(2 * k + 2 + 2 * i, 6 * k + 4 + 2 * i, A);
      for (int j = 0; j <= k; ++j) pair(4 * j + 1, 4 * k + 3 + 2 * j, B);
      for (int j = 0; j <= k - 1; ++j) pair(4 * j + 3, 6 * k + 7 + 2 * j, B);
      special({0, 2 * k + 2, 6 * k + 5});
      break;
  }
  plan.normalize();
  plan.validate();
  return plan;
}

MergePlan case_plan(const CasePlanId& id) { return case_plan(id.case_number, id.k); }

std::string family_name(CycleFamily family) {
  switch (family) {
    case CycleFamily::Even: return "G_2m";
    case CycleFamily::Tripartite1: return "G1_2m+1";
    case CycleFamily::Tripartite2: return "G2_2m+1";
    case CycleFamily::Tripartite3: return "G3_2m+1";
  }
  return "?";
}

CycleTransform transform_cycle(int n, const MergePlan& plan) {
  if (n < 8) throw Error(ErrorKind::InvalidOrder, "cycle transforms need n >= 8, got " + std::to_string(n));
  if (plan.n != n) throw Error(ErrorKind::InvalidPlan, "plan is for a cycle of order " + std::to_string(plan.n));
  plan.validate();

  CycleTransform out;
  out.m = n / 4;
  const int m = out.m;
  std::vector<int> special;
  switch (n % 4) {
    case 0: out.family = CycleFamily::Even; break;
    case 2: out.family = CycleFamily::Tripartite1; special = {0, 2 * m + 1}; break;
    case 1: out.family = CycleFamily::Tripartite2; special = {0}; break;
    case 3: out.family = CycleFamily::Tripartite3; special = {0, m + 1, 3 * m + 2}; break;
  }
  Sum special_sum = 0;
  switch (out.family) {
    case CycleFamily::Even: special_sum = 6 * m + 4; break;
    case CycleFamily::Tripartite1: special_sum = 6 * m + 6; break;
    case CycleFamily::Tripartite2: special_sum = 2 * m + 2; break;
    case CycleFamily::Tripartite3: special_sum = 10 * m + 12; break;
  }

  // Structural check of the plan against the family.
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    auto block = plan.blocks[i];
    std::sort(block.begin(), block.end());
    const bool holds_zero = block.front() == 0;
    if (holds_zero && out.family != CycleFamily::Even) {
      if (block != special) {
        throw Error(ErrorKind::InvalidPlan, "block of v_0 must be the " + family_name(out.family) + " special block");
      }
      continue;
    }
    if (block.size() != 2) throw Error(ErrorKind::InvalidPlan, "non-special blocks must be pairs");
    if (block[0] % 2 != block[1] % 2) {
      throw Error(ErrorKind::ParityViolation, "pair (" + std::to_string(block[0]) + "," + std::to_string(block[1]) +
                                                  ") mixes parities");
    }
  }

  const Graph cycle = build_cycle(n);
  out.graph = merge_vertices(cycle, plan);
  out.labeling = c_labeling(n);

  const Sum even_pair = 2 * (static_cast<Sum>(n) + 2);
  const Sum odd_pair = 2 * (static_cast<Sum>(n) + 1);
  out.expected_sums.resize(out.graph.vertex_count());
  for (int v = 0; v < out.graph.vertex_count(); ++v) {
    const auto& members = out.graph.provenance(v);
    if (members.front() == 0) {
      out.special_vertex = v;
      out.expected_sums[v] = special_sum;
    } else {
      out.expected_sums[v] = members.front() % 2 == 0 ? even_pair : odd_pair;
    }
  }
  out.expected_colors = out.expected_sums;
  std::sort(out.expected_colors.begin(), out.expected_colors.end());
  out.expected_colors.erase(std::unique(out.expected_colors.begin(), out.expected_colors.end()),
                            out.expected_colors.end());

  const auto coloring = induced_coloring(out.graph, out.labeling);
  if (coloring.sums != out.expected_sums) fail("merged sums differ from the " + family_name(out.family) + " formulas");
  if (!coloring.conflicts.empty()) fail("merged labeling is not local antimagic");
  return out;
}

CirculantCertificate verify_case1_circulant(int k) {
  const MergePlan plan = case_plan(1, k);
  CirculantCertificate cert;
  cert.merged = merge_vertices(build_cycle(8 * k), plan);
  cert.spec = CirculantSpec{4 * k, {1, 2 * k - 1}};
  cert.renaming.assign(cert.merged.vertex_count(), -1);
  for (int v = 0; v < cert.merged.vertex_count(); ++v) {
    const int low = cert.merged.provenance(v).front();
    int u = -1;
    if (low % 2 == 0) {
      u = low;  // v_{2i,4k+2i} -> u_{2i}
    } else {
      const int j = (low - 1) / 2;
      if (j <= k - 1) u = 2 * j + 1;
      else if (j >= 2 * k && j <= 3 * k - 1) u = 2 * j - 2 * k + 1;
    }
    if (u < 0) fail("vertex " + cert.merged.vertex_name(v) + " has no u-name");
    cert.renaming[v] = u;
  }
  if (!is_isomorphism(cert.merged, build_circulant(cert.spec), cert.renaming)) {
    fail("u-renaming does not carry the Case 1 graph onto " + cert.spec.name());
  }
  return cert;
}

std::vector<int> EvenOddArrays::column_of_b(int y) const {
  std::vector<int> col;
  for (const auto& row : b) col.push_back(row.at(y));
  return col;
}

namespace {

using Block = std::vector<std::vector<int>>;

Block shifted(const Block& x, int c) {
  Block out = x;
  for (auto& row : out)
    for (int& v : row) v += c;
  return out;
}

// [[x, x+2c], [x+c, x+3c]]
Block quadruple(const Block& x, int c) {
  const Block right = shifted(x, 2 * c);
  const Block below = shifted(x, c);
  const Block corner = shifted(x, 3 * c);
  Block out;
  for (std::size_t r = 0; r < x.size(); ++r) {
    auto row = x[r];
    row.insert(row.end(), right[r].begin(), right[r].end());
    out.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < x.size(); ++r) {
    auto row = below[r];
    row.insert(row.end(), corner[r].begin(), corner[r].end());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

EvenOddArrays build_even_odd_arrays(int s, int t) {
  if (s < 2) throw Error(ErrorKind::OutOfRange, "s must be >= 2");
  if (t < 0) throw Error(ErrorKind::OutOfRange, "t must be >= 0");
  EvenOddArrays arr;
  arr.s = s;
  arr.t = t;
  arr.n = (1 << (2 * s - 1)) * (t + 2);
  // First group of evens as a column, first group of odds as a row.
  Block a, b(1);
  for (int x = 0; x < t + 2; ++x) {
    a.push_back({2 * x});
    b[0].push_back(2 * x + 1);
  }
  for (int i = 1; i <= s - 1; ++i) {
    const int offset = (1 << (2 * i - 2)) * (2 * t + 4);
    a = quadruple(a, offset);
    b = quadruple(b, offset);
  }
  arr.a = std::move(a);
  arr.b = std::move(b);
  return arr;
}

MergePlan matrix_merge_plan(const EvenOddArrays& arrays) {
  MergePlan plan;
  plan.n = arrays.n;
  for (const auto& row : arrays.a) {
    plan.blocks.push_back(row);
    plan.kinds.push_back(BlockKind::A);
  }
  for (int y = 0; y < arrays.order(); ++y) {
    plan.blocks.push_back(arrays.column_of_b(y));
    plan.kinds.push_back(BlockKind::B);
  }
  plan.normalize();
  plan.validate();
  return plan;
}

ConstructionMatrix build_construction_matrix(int s, int t) {
  ConstructionMatrix cm;
  cm.arrays = build_even_odd_arrays(s, t);
  const auto& arr = cm.arrays;
  const int n = arr.n;
  const int order = arr.order();
  const int half_degree = 1 << (s - 1);

  // Incidence and labels from consecutive integers between row x of a and
  // column y of b, plus the wrap-around corner (0, n-1).
  cm.incidence.assign(order, std::vector<int>(order, 0));
  cm.labels.assign(order, std::vector<std::optional<int>>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      for (int p : arr.a[x]) {
        for (int q : arr.column_of_b(y)) {
          if (q != p + 1 && q != p - 1) continue;
          if (cm.incidence[x][y]) fail("two consecutive pairs in one cell");
          cm.incidence[x][y] = 1;
          cm.labels[x][y] = q == p + 1 ? p / 2 + 1 : n - p / 2 + 1;
        }
      }
    }
  }
  if (cm.incidence[0][order - 1]) fail("corner cell already occupied");
  cm.incidence[0][order - 1] = 1;
  cm.labels[0][order - 1] = n / 2 + 1;

  std::vector<int> seen(n + 1, 0);
  cm.row_sums.assign(order, 0);
  cm.col_sums.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (!cm.labels[x][y]) continue;
      const int label = *cm.labels[x][y];
      if (label < 1 || label > n || seen[label]++) fail("labels are not a bijection onto 1..n");
      cm.row_sums[x] += label;
      cm.col_sums[y] += label;
    }
  }
  for (int x = 0; x < order; ++x) {
    int row_ones = 0, col_ones = 0;
    for (int y = 0; y < order; ++y) {
      row_ones += cm.incidence[x][y];
      col_ones += cm.incidence[y][x];
      // Circulant: each row is the previous one shifted right by one.
      if (cm.incidence[(x + 1) % order][(y + 1) % order] != cm.incidence[x][y]) fail("incidence is not circulant");
    }
    // Every even p pairs with p+1 and p-1 (0 with 1 and n-1).
    if (row_ones != 2 * half_degree || col_ones != 2 * half_degree) fail("consecutive-pair count off");
  }

  // The same graph by merging the C-labeled cycle directly.
  const MergePlan plan = matrix_merge_plan(arr);
  cm.merged.graph = merge_vertices(build_cycle(n), plan);
  cm.merged.labeling = c_labeling(n);
  std::map<int, int> vertex_of;  // smallest member -> merged vertex
  for (int v = 0; v < cm.merged.graph.vertex_count(); ++v) vertex_of[cm.merged.graph.provenance(v).front()] = v;
  for (int x = 0; x < order; ++x) cm.row_vertex.push_back(vertex_of.at(*std::min_element(arr.a[x].begin(), arr.a[x].end())));
  for (int y = 0; y < order; ++y) {
    const auto col = arr.column_of_b(y);
    cm.col_vertex.push_back(vertex_of.at(*std::min_element(col.begin(), col.end())));
  }
  const auto mult = cm.merged.graph.multiplicity_matrix();
  std::map<std::pair<int, int>, int> label_of;
  for (int i = 0; i < cm.merged.graph.edge_count(); ++i) {
    const Edge& e = cm.merged.graph.edge(i);
    label_of[{std::min(e.u, e.v), std::max(e.u, e.v)}] = cm.merged.labeling.labels[i];
  }
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int u = cm.row_vertex[x], v = cm.col_vertex[y];
      if (mult[u][v] != cm.incidence[x][y]) fail("incidence disagrees with the merged cycle");
      if (cm.labels[x][y] && label_of.at({std::min(u, v), std::max(u, v)}) != *cm.labels[x][y]) {
        fail("label matrix disagrees with the merged C-labeling");
      }
    }
  }

  // Rows become u_0, u_2, ...; columns u_1, u_3, ...
  const int big_n = 2 * order;
  cm.circulant.m = big_n;
  for (int j = 0; j < (1 << (s - 2)); ++j) {
    cm.circulant.steps.push_back(1 + j * (2 * t + 4));
    cm.circulant.steps.push_back(2 * t + 3 + j * (2 * t + 4));
  }
  std::sort(cm.circulant.steps.begin(), cm.circulant.steps.end());
  cm.circulant.validate();
  cm.renaming.assign(cm.merged.graph.vertex_count(), -1);
  for (int x = 0; x < order; ++x) cm.renaming[cm.row_vertex[x]] = 2 * x;
  for (int y = 0; y < order; ++y) cm.renaming[cm.col_vertex[y]] = 2 * y + 1;
  const Graph circ = build_circulant(cm.circulant);
  if (!is_isomorphism(cm.merged.graph, circ, cm.renaming)) fail("renamed graph is not " + cm.circulant.name());

  std::map<std::pair<int, int>, int> renamed_label;
  for (int i = 0; i < cm.merged.graph.edge_count(); ++i) {
    const Edge& e = cm.merged.graph.edge(i);
    const int a = cm.renaming[e.u], b = cm.renaming[e.v];
    renamed_label[{std::min(a, b), std::max(a, b)}] = cm.merged.labeling.labels[i];
  }
  cm.circulant_labeled.graph = circ;
  for (const Edge& e : circ.edges()) {
    cm.circulant_labeled.labeling.labels.push_back(renamed_label.at({std::min(e.u, e.v), std::max(e.u, e.v)}));
  }
  const auto classes = color_count(cm.circulant_labeled.graph, cm.circulant_labeled.labeling);
  if (classes.count != 3) fail("circulant labeling does not have 3 colours");
  return cm;
}

std::string render_construction_matrix(const ConstructionMatrix& cm) {
  const auto& arr = cm.arrays;
  const int order = arr.order();
  std::size_t w = std::to_string(arr.n).size();
  for (Sum x : cm.row_sums) w = std::max(w, std::to_string(x).size());
  for (Sum x : cm.col_sums) w = std::max(w, std::to_string(x).size());
  auto pad = [w](const std::string& s) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  const std::size_t left = arr.a.front().size() * (w + 1);
  std::ostringstream os;
  for (const auto& brow : arr.b) {
    os << std::string(left, ' ') << " |";
    for (int v : brow) os << ' ' << pad(std::to_string(v));
    os << '\n';
  }
  os << std::string(left + 1, '-') << '+' << std::string(order * (w + 1), '-') << "-+" << std::string(w + 1, '-')
     << '\n';
  for (int x = 0; x < order; ++x) {
    for (int v : arr.a[x]) os << ' ' << pad(std::to_string(v));
    os << " |";
    for (int y = 0; y < order; ++y) os << ' ' << pad(cm.labels[x][y] ? std::to_string(*cm.labels[x][y]) : "*");
    os << " | " << pad(std::to_string(cm.row_sums[x])) << '\n';
  }
  os << std::string(left + 1, '-') << '+' << std::string(order * (w + 1), '-') << '\n';
  os << std::string(left > 3 ? left - 3 : 0, ' ') << "Sum |";
  for (int y = 0; y < order; ++y) os << ' ' << pad(std::to_string(cm.col_sums[y]));
  os << '\n';
  return os.str();
}

}  // namespace antimagic
