#include "antimagic/labeling.hpp"

#include <algorithm>
#include <set>

#include "antimagic/error.hpp"

namespace antimagic {

bool EdgeLabeling::is_bijective() const {
  const int q = size();
  std::vector<char> seen(q + 1, 0);
  for (int x : labels) {
    if (x < 1 || x > q || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int EdgeLabeling::edge_with_label(int label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

void require_bijection(const Graph& g, const EdgeLabeling& f) {
  if (f.size() != g.edge_count()) {
    throw Error(ErrorKind::InvalidLabeling, "labeling has " + std::to_string(f.size()) + " labels for " +
                                                std::to_string(g.edge_count()) + " edges");
  }
  if (!f.is_bijective()) {
    throw Error(ErrorKind::InvalidLabeling, "labels are not a bijection onto {1.." + std::to_string(f.size()) + "}");
  }
}

InducedColoring induced_coloring(const Graph& g, const EdgeLabeling& f) {
  require_bijection(g, f);
  InducedColoring out;
  out.sums.assign(g.vertex_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out.sums[e.u] += f.labels[i];
    out.sums[e.v] += f.labels[i];
  }
  out.colors = out.sums;
  std::sort(out.colors.begin(), out.colors.end());
  out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
  std::set<std::pair<int, int>> conflicts;
  for (const Edge& e : g.edges()) {
    if (out.sums[e.u] == out.sums[e.v]) conflicts.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  out.conflicts.assign(conflicts.begin(), conflicts.end());
  return out;
}

AntimagicVerdict is_local_antimagic(const Graph& g, const EdgeLabeling& f) {
  const auto coloring = induced_coloring(g, f);
  AntimagicVerdict verdict;
  verdict.ok = coloring.conflicts.empty();
  if (!verdict.ok) verdict.conflict = coloring.conflicts.front();
  return verdict;
}

ColorClasses color_count(const Graph& g, const EdgeLabeling& f) {
  const auto coloring = induced_coloring(g, f);
  if (!coloring.conflicts.empty()) {
    const auto [u, v] = coloring.conflicts.front();
    throw Error(ErrorKind::Precondition, "labeling is not local antimagic: vertices " + std::to_string(u) + " and " +
                                             std::to_string(v) + " share sum " +
                                             std::to_string(coloring.sums[u]));
  }
  ColorClasses out;
  for (int v = 0; v < g.vertex_count(); ++v) out.classes[coloring.sums[v]].push_back(v);
  out.count = static_cast<int>(out.classes.size());
  return out;
}

EdgeLabeling complement_labeling(const EdgeLabeling& f) {
  if (!f.is_bijective()) throw Error(ErrorKind::InvalidLabeling, "complement of a non-bijective labeling");
  EdgeLabeling g;
  g.labels.reserve(f.labels.size());
  for (int x : f.labels) g.labels.push_back(f.size() + 1 - x);
  return g;
}

bool check_nonreg_conditions(const Graph& g, const EdgeLabeling& f) {
  const auto coloring = induced_coloring(g, f);
  const auto deg = g.degrees();
  const Sum q1 = f.size() + 1;
  // Vertices are compared per distinct (sum, degree) pair.
  std::set<std::pair<Sum, int>> kinds;
  for (int v = 0; v < g.vertex_count(); ++v) kinds.emplace(coloring.sums[v], deg[v]);
  for (auto x = kinds.begin(); x != kinds.end(); ++x) {
    for (auto y = std::next(x); y != kinds.end(); ++y) {
      if (x->first == y->first) return false;  // same sum, different degree
      if (q1 * (x->second - y->second) == x->first - y->first) return false;
    }
  }
  return true;
}

bool check_edge_deletion_lemma(const Graph& g, const EdgeLabeling& f, int e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(e));
  const auto coloring = induced_coloring(g, f);
  if (!coloring.conflicts.empty()) return false;
  if (f.labels[e] != 1) return false;
  const auto deg = g.degrees();
  std::map<Sum, int> class_degree;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = class_degree.emplace(coloring.sums[v], deg[v]);
    if (!fresh && it->second != deg[v]) return false;
  }
  std::set<Sum> shifted;
  for (const auto& [sum, d] : class_degree) {
    if (!shifted.insert(sum - d).second) return false;
  }
  return true;
}

EdgeLabeling labeling_after_deletion(const EdgeLabeling& f, int e) {
  if (e < 0 || e >= f.size()) throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(e));
  const int removed = f.labels[e];
  EdgeLabeling out;
  for (int i = 0; i < f.size(); ++i) {
    if (i == e) continue;
    const int x = f.labels[i];
    out.labels.push_back(x > removed ? x - 1 : x);
  }
  return out;
}

TwoColorVerdict check_two_color_necessary(const Graph& g) {
  TwoColorVerdict v;
  v.q = g.edge_count();
  v.half_total = static_cast<Sum>(v.q) * (v.q + 1) / 2;
  const auto deg = g.degrees();
  v.pendant_count = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  const auto parts = partite_classes(g, 2);
  v.bipartite = parts.has_value();
  if (v.bipartite) {
    v.part1 = static_cast<int>(std::max((*parts)[0].size(), (*parts)[1].size()));
    v.part2 = static_cast<int>(std::min((*parts)[0].size(), (*parts)[1].size()));
    v.parts_unequal = v.part1 != v.part2;
    v.divisible_by_part1 = v.part1 > 0 && v.half_total % v.part1 == 0;
    v.divisible_by_part2 = v.part2 > 0 && v.half_total % v.part2 == 0;
    v.corollary_conditions_hold = v.parts_unequal && v.divisible_by_part1 && v.divisible_by_part2;
    v.even_size_with_one_pendant = v.q % 2 == 0 && v.pendant_count == 1;
  }
  if (!v.bipartite) v.reasons.push_back("not bipartite");
  if (v.pendant_count >= 2) v.reasons.push_back("at least two pendants");
  if (v.bipartite) {
    if (!v.parts_unequal) v.reasons.push_back("parts of equal size");
    if (!v.divisible_by_part1) {
      v.reasons.push_back(std::to_string(v.half_total) + " not divisible by part size " + std::to_string(v.part1));
    }
    if (!v.divisible_by_part2) {
      v.reasons.push_back(std::to_string(v.half_total) + " not divisible by part size " + std::to_string(v.part2));
    }
    if (v.even_size_with_one_pendant) v.reasons.push_back("even size with one pendant");
  }
  v.outlook = v.reasons.empty() ? TwoColorOutlook::Possible : TwoColorOutlook::AtLeastThreeForced;
  return v;
}

bool two_color_identity_holds(const Graph& g, const EdgeLabeling& f) {
  const auto classes = color_count(g, f);
  if (classes.count != 2) return false;
  const auto& [x, xs] = *classes.classes.begin();
  const auto& [y, ys] = *classes.classes.rbegin();
  const Sum half = static_cast<Sum>(f.size()) * (f.size() + 1) / 2;
  if (x * static_cast<Sum>(xs.size()) != half || y * static_cast<Sum>(ys.size()) != half) return false;
  if (xs.size() <= ys.size()) return false;
  // Each colour class must be independent, so the classes form the bipartition.
  const auto coloring = induced_coloring(g, f);
  for (const Edge& e : g.edges()) {
    if (coloring.sums[e.u] == coloring.sums[e.v]) return false;
  }
  return true;
}

}  // namespace antimagic
