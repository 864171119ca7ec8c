#include "antimagic/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

int gcd(int a, int b) { return std::gcd(a, b); }

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count, std::move(edges), {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> provenance)
    : vertex_count_(vertex_count), edges_(std::move(edges)), provenance_(std::move(provenance)) {
  if (vertex_count_ < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw Error(ErrorKind::OutOfRange, "edge endpoint outside [0, " + std::to_string(vertex_count_) + ")");
    }
    if (e.u == e.v) throw Error(ErrorKind::LoopCreated, "loop at vertex " + std::to_string(e.u));
  }
  if (provenance_.empty()) {
    provenance_.resize(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) provenance_[v] = {v};
  } else if (static_cast<int>(provenance_.size()) != vertex_count_) {
    throw Error(ErrorKind::InvalidInput, "provenance size does not match vertex count");
  }
}

const Edge& Graph::edge(int e) const {
  if (e < 0 || e >= edge_count()) throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(e));
  return edges_[e];
}

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::incident_edges() const {
  std::vector<std::vector<int>> inc(vertex_count_);
  for (int i = 0; i < edge_count(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> nb(vertex_count_);
  for (const Edge& e : edges_) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return nb;
}

std::vector<std::vector<int>> Graph::multiplicity_matrix() const {
  std::vector<std::vector<int>> mult(vertex_count_, std::vector<int>(vertex_count_, 0));
  for (const Edge& e : edges_) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool Graph::is_connected() const {
  if (vertex_count_ == 0) return true;
  auto nb = neighbors();
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nb[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

bool Graph::is_regular() const {
  auto deg = degrees();
  return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

std::string Graph::vertex_name(int v) const {
  std::ostringstream os;
  os << 'v';
  const auto& orig = provenance_.at(v);
  for (std::size_t i = 0; i < orig.size(); ++i) os << (i ? "," : "") << orig[i];
  return os.str();
}

void CirculantSpec::validate() const {
  if (m < 3) throw Error(ErrorKind::InvalidOrder, "circulant modulus must be >= 3, got " + std::to_string(m));
  if (steps.empty()) throw Error(ErrorKind::InvalidSpec, "circulant needs at least one step");
  const int bound = (m + 1) / 2;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && steps[i] <= steps[i - 1]) {
      throw Error(ErrorKind::InvalidSpec, "steps must be strictly increasing without duplicates");
    }
    if (steps[i] < 1 || steps[i] >= bound) {
      throw Error(ErrorKind::InvalidSpec,
                  "step " + std::to_string(steps[i]) + " outside [1, " + std::to_string(bound) + ")");
    }
    if (gcd(steps[i], m) != 1) {
      throw Error(ErrorKind::UnsupportedStep,
                  "step " + std::to_string(steps[i]) + " is not coprime to " + std::to_string(m));
    }
  }
}

std::string CirculantSpec::name() const {
  std::ostringstream os;
  os << "C_" << m << '(';
  for (std::size_t i = 0; i < steps.size(); ++i) os << (i ? "," : "") << steps[i];
  os << ')';
  return os.str();
}

MergePlan MergePlan::identity(int n) {
  MergePlan plan;
  plan.n = n;
  for (int v = 0; v < n; ++v) {
    plan.blocks.push_back({v});
    plan.kinds.push_back(v % 2 == 0 ? BlockKind::A : BlockKind::B);
  }
  return plan;
}

void MergePlan::normalize() {
  std::vector<std::pair<std::vector<int>, BlockKind>> zipped;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto b = blocks[i];
    std::sort(b.begin(), b.end());
    zipped.emplace_back(std::move(b), i < kinds.size() ? kinds[i] : BlockKind::C);
  }
  std::sort(zipped.begin(), zipped.end(),
            [](const auto& x, const auto& y) { return x.first.front() < y.first.front(); });
  blocks.clear();
  kinds.clear();
  for (auto& [b, k] : zipped) {
    blocks.push_back(std::move(b));
    kinds.push_back(k);
  }
}

void MergePlan::validate() const {
  if (kinds.size() != blocks.size()) throw Error(ErrorKind::InvalidPlan, "one kind per block required");
  std::vector<int> hits(std::max(n, 0), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw Error(ErrorKind::InvalidPlan, "empty block");
    for (int v : blocks[i]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidPlan, "vertex " + std::to_string(v) + " outside plan");
      ++hits[v];
      if (kinds[i] == BlockKind::A && v % 2 != 0) {
        throw Error(ErrorKind::ParityViolation, "A-block holds odd vertex " + std::to_string(v));
      }
      if (kinds[i] == BlockKind::B && v % 2 != 1) {
        throw Error(ErrorKind::ParityViolation, "B-block holds even vertex " + std::to_string(v));
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      throw Error(ErrorKind::InvalidPlan, "vertex " + std::to_string(v) + " covered " + std::to_string(hits[v]) +
                                              " times");
    }
  }
}

Graph build_cycle(int m) {
  if (m < 3) throw Error(ErrorKind::InvalidOrder, "cycle order must be >= 3, got " + std::to_string(m));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int j = 0; j < m; ++j) edges.push_back({j, (j + 1) % m});
  return Graph(m, std::move(edges));
}

Graph build_path(int vertex_count) {
  if (vertex_count < 2) throw Error(ErrorKind::InvalidOrder, "path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < vertex_count; ++j) edges.push_back({j, j + 1});
  return Graph(vertex_count, std::move(edges));
}

Graph build_circulant(const CirculantSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.m) * spec.steps.size());
  for (int a : spec.steps) {
    for (int j = 0; j < spec.m; ++j) {
      edges.push_back({static_cast<int>((1LL * j * a) % spec.m), static_cast<int>((1LL * (j + 1) * a) % spec.m)});
    }
  }
  return Graph(spec.m, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidOrder, "complete bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
  return Graph(a + b, std::move(edges));
}

Graph merge_vertices(const Graph& g, std::span<const std::vector<int>> blocks) {
  const int n = g.vertex_count();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> sorted;
  sorted.reserve(blocks.size());
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorKind::InvalidPlan, "empty block");
    auto b = block;
    std::sort(b.begin(), b.end());
    sorted.push_back(std::move(b));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (int v : sorted[i]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidPlan, "vertex " + std::to_string(v) + " not in graph");
      if (owner[v] != -1) throw Error(ErrorKind::InvalidPlan, "vertex " + std::to_string(v) + " in two blocks");
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] == -1) throw Error(ErrorKind::InvalidPlan, "vertex " + std::to_string(v) + " not covered");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (owner[e.u] == owner[e.v]) {
      throw Error(ErrorKind::LoopCreated,
                  "block merges adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v));
    }
    edges.push_back({owner[e.u], owner[e.v]});
  }
  std::vector<std::vector<int>> provenance(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (int v : sorted[i]) {
      const auto& orig = g.provenance(v);
      provenance[i].insert(provenance[i].end(), orig.begin(), orig.end());
    }
    std::sort(provenance[i].begin(), provenance[i].end());
  }
  return Graph(static_cast<int>(sorted.size()), std::move(edges), std::move(provenance));
}

Graph merge_vertices(const Graph& g, const MergePlan& plan) {
  if (plan.n != g.vertex_count()) {
    throw Error(ErrorKind::InvalidPlan, "plan order " + std::to_string(plan.n) + " does not match graph order " +
                                            std::to_string(g.vertex_count()));
  }
  plan.validate();
  return merge_vertices(g, std::span<const std::vector<int>>(plan.blocks));
}

Graph one_point_union(std::span<const Graph> graphs, std::span<const int> attach) {
  if (graphs.empty()) throw Error(ErrorKind::InvalidInput, "one-point union of no graphs");
  if (graphs.size() != attach.size()) throw Error(ErrorKind::InvalidInput, "one attach vertex per graph required");
  std::vector<Edge> edges;
  std::vector<std::vector<int>> provenance(1);
  int next = 1;
  int offset = 0;  // running index in the disjoint union, used as provenance
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const int a = attach[i];
    if (a < 0 || a >= g.vertex_count()) throw Error(ErrorKind::OutOfRange, "attach vertex outside graph");
    std::vector<int> local(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v == a) {
        local[v] = 0;
        provenance[0].push_back(offset + v);
      } else {
        local[v] = next++;
        provenance.push_back({offset + v});
      }
    }
    for (const Edge& e : g.edges()) edges.push_back({local[e.u], local[e.v]});
    offset += g.vertex_count();
  }
  return Graph(next, std::move(edges), std::move(provenance));
}

Graph delete_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::OutOfRange, "edge index " + std::to_string(e));
  auto edges = g.edges();
  edges.erase(edges.begin() + e);
  return Graph(g.vertex_count(), std::move(edges), g.provenance());
}

namespace {

std::optional<std::vector<int>> two_colouring(const std::vector<std::vector<int>>& nb) {
  const int n = static_cast<int>(nb.size());
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : nb[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool colour_backtrack(const std::vector<std::vector<int>>& nb, const std::vector<int>& order, std::size_t pos,
                      int k, std::vector<int>& colour) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  int max_used = -1;
  for (std::size_t i = 0; i < pos; ++i) max_used = std::max(max_used, colour[order[i]]);
  // Colour symmetry: never open more than one fresh colour.
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (int w : nb[v]) {
      if (colour[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colour[v] = c;
    if (colour_backtrack(nb, order, pos + 1, k, colour)) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> partite_classes(const Graph& g, int k) {
  if (k != 2 && k != 3) throw Error(ErrorKind::InvalidInput, "partite_classes supports k = 2 or 3");
  const auto nb = g.neighbors();
  const int n = g.vertex_count();
  std::vector<int> colour;
  if (k == 2) {
    auto c = two_colouring(nb);
    if (!c) return std::nullopt;
    colour = std::move(*c);
  } else {
    // BFS order keeps each vertex next to an already coloured neighbour.
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : nb[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
    colour.assign(n, -1);
    if (!colour_backtrack(nb, order, 0, 3, colour)) return std::nullopt;
  }
  std::vector<std::vector<int>> classes(k);
  for (int v = 0; v < n; ++v) classes[colour[v]].push_back(v);
  return classes;
}

bool has_triangle(const Graph& g) {
  const auto nb = g.neighbors();
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : nb[u]) {
      if (v <= u) continue;
      std::vector<int> common;
      std::set_intersection(nb[u].begin(), nb[u].end(), nb[v].begin(), nb[v].end(), std::back_inserter(common));
      for (int w : common) {
        if (w > v) return true;
      }
    }
  }
  return false;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> phi) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (static_cast<int>(phi.size()) != g1.vertex_count()) return false;
  std::vector<char> hit(g2.vertex_count(), 0);
  for (int x : phi) {
    if (x < 0 || x >= g2.vertex_count() || hit[x]) return false;
    hit[x] = 1;
  }
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<std::pair<int, int>> mapped, target;
  for (const Edge& e : g1.edges()) mapped.push_back(key(phi[e.u], phi[e.v]));
  for (const Edge& e : g2.edges()) target.push_back(key(e.u, e.v));
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

namespace {

// Joint colour refinement over both graphs so colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const std::vector<std::vector<int>>& m1,
                                                             const std::vector<std::vector<int>>& m2) {
  const int n = static_cast<int>(m1.size());
  std::vector<int> c1(n), c2(n);
  for (int v = 0; v < n; ++v) {
    c1[v] = std::accumulate(m1[v].begin(), m1[v].end(), 0);
    c2[v] = std::accumulate(m2[v].begin(), m2[v].end(), 0);
  }
  int classes = -1;
  for (int round = 0; round <= n; ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [&](const std::vector<std::vector<int>>& m, const std::vector<int>& c, int v) {
      std::vector<int> sig;
      for (int w = 0; w < n; ++w) {
        if (m[v][w]) sig.push_back(c[w] * (n + 1) + m[v][w]);
      }
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[v]);
      return sig;
    };
    std::vector<std::vector<int>> s1(n), s2(n);
    for (int v = 0; v < n; ++v) {
      s1[v] = signature(m1, c1, v);
      s2[v] = signature(m2, c2, v);
      ids.emplace(s1[v], 0);
      ids.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      c1[v] = ids[s1[v]];
      c2[v] = ids[s2[v]];
    }
    if (next == classes) break;
    classes = next;
  }
  return {c1, c2};
}

struct IsoSearch {
  const std::vector<std::vector<int>>& m1;
  const std::vector<std::vector<int>>& m2;
  const std::vector<int>& c1;
  const std::vector<int>& c2;
  std::vector<int> order;
  std::vector<int> anchor;  // earlier-ordered neighbour of order[i], or -1
  std::vector<std::vector<int>> nb2;
  std::vector<int> phi;
  std::vector<char> used;

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    const int n = static_cast<int>(m1.size());
    std::vector<int> candidates;
    if (anchor[pos] >= 0) {
      candidates = nb2[phi[anchor[pos]]];
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (int c : candidates) {
      if (used[c] || c2[c] != c1[u]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        const int x = order[i];
        ok = m1[u][x] == m2[c][phi[x]];
      }
      if (!ok) continue;
      phi[u] = c;
      used[c] = 1;
      if (extend(pos + 1)) return true;
      used[c] = 0;
      phi[u] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const auto m1 = g1.multiplicity_matrix();
  const auto m2 = g2.multiplicity_matrix();
  auto [c1, c2] = refine_colours(m1, m2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<int> class_size(n * 2 + 2, 0);
  for (int c : c1) {
    if (c >= static_cast<int>(class_size.size())) class_size.resize(c + 1, 0);
    ++class_size[c];
  }

  // Greedy order: most links back into the ordered prefix, then rarest colour.
  const auto nb1 = g1.neighbors();
  std::vector<int> order, anchor;
  std::vector<char> placed(n, 0);
  std::vector<int> links(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || links[v] > links[best] ||
          (links[v] == links[best] && class_size[c1[v]] < class_size[c1[best]])) {
        best = v;
      }
    }
    int anc = -1;
    for (int w : nb1[best]) {
      if (placed[w]) {
        anc = w;
        break;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    anchor.push_back(anc);
    for (int w : nb1[best]) ++links[w];
  }

  IsoSearch search{m1, m2, c1, c2, order, anchor, g2.neighbors(), std::vector<int>(n, -1), std::vector<char>(n, 0)};
  if (!search.extend(0)) return std::nullopt;
  return search.phi;
}

}  // namespace antimagic
