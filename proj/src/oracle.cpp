#include "antimagic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "antimagic/error.hpp"

namespace antimagic {

SearchBudget SearchBudget::from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("ANTIMAGIC_BUDGET_EDGES")) {
    try {
      b.max_edges = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string("ANTIMAGIC_BUDGET_EDGES is not an integer: ") + env);
    }
  }
  return b;
}

namespace {

using Clock = std::chrono::steady_clock;

// Edges in depth-first vertex order, so vertices complete early.
std::vector<int> dfs_edge_order(const Graph& g) {
  const auto inc = g.incident_edges();
  std::vector<bool> seen_v(g.vertex_count(), false), seen_e(g.edge_count(), false);
  std::vector<int> order, stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (seen_v[v]) continue;
    seen_v[v] = true;
    for (int e : inc[v]) {
      const int w = g.edge(e).other(v);
      if (seen_v[w] && !seen_e[e]) {
        seen_e[e] = true;
        order.push_back(e);
      }
    }
    for (auto it = inc[v].rbegin(); it != inc[v].rend(); ++it) {
      const int w = g.edge(*it).other(v);
      if (!seen_v[w]) stack.push_back(w);
    }
  }
  return order;
}

struct Shared {
  std::atomic<int> best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<bool> over{false};
  std::mutex m;
  EdgeLabeling witness;
  bool stop_at_first = false;
  int floor = 1;  // no labeling can beat this
  Clock::time_point start;
  const SearchBudget* budget = nullptr;
};

class Search {
 public:
  Search(const Graph& g, Shared& shared) : g_(g), sh_(shared) {
    q_ = g.edge_count();
    order_ = dfs_edge_order(g);
    nb_ = g.neighbors();
    const auto inc = g.incident_edges();
    // done_at[i]: vertices whose last incident edge is order_[i]
    std::vector<int> pos(q_);
    for (int i = 0; i < q_; ++i) pos[order_[i]] = i;
    done_at_.assign(q_, {});
    for (int v = 0; v < g.vertex_count(); ++v) {
      int last = -1;
      for (int e : inc[v]) last = std::max(last, pos[e]);
      done_at_[last].push_back(v);
    }
    labels_.assign(q_, 0);
    used_.assign(q_ + 1, false);
    sum_.assign(g.vertex_count(), 0);
    complete_.assign(g.vertex_count(), false);
  }

  void run(int first_label) {
    place(0, first_label);
  }

  int q() const { return q_; }

 private:
  void place(int depth, int label) {
    const int e = order_[depth];
    const Edge& ed = g_.edge(e);
    labels_[e] = label;
    used_[label] = true;
    sum_[ed.u] += label;
    sum_[ed.v] += label;
    std::vector<Sum> added;
    bool ok = true;
    for (int v : done_at_[depth]) {
      complete_[v] = true;
      for (int w : nb_[v]) {
        if (w != v && complete_[w] && sum_[w] == sum_[v]) ok = false;
      }
      if (std::find(distinct_.begin(), distinct_.end(), sum_[v]) == distinct_.end()) {
        distinct_.push_back(sum_[v]);
        added.push_back(sum_[v]);
      }
    }
    if (ok && static_cast<int>(distinct_.size()) < sh_.best.load()) descend(depth + 1);
    for (std::size_t i = 0; i < added.size(); ++i) distinct_.pop_back();
    for (int v : done_at_[depth]) complete_[v] = false;
    sum_[ed.u] -= label;
    sum_[ed.v] -= label;
    used_[label] = false;
  }

  void descend(int depth) {
    if (sh_.abort.load(std::memory_order_relaxed)) return;
    const auto n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > sh_.budget->node_limit ||
        ((n & 0xFFFF) == 0 && std::chrono::duration<double>(Clock::now() - sh_.start).count() >
                                  sh_.budget->time_limit_seconds)) {
      sh_.over = true;
      sh_.abort = true;
      return;
    }
    if (depth == q_) {
      const int c = static_cast<int>(distinct_.size());
      std::lock_guard lock(sh_.m);
      if (c < sh_.best.load()) {
        sh_.best = c;
        sh_.witness.labels = labels_;
        if (sh_.stop_at_first || c <= sh_.floor) sh_.abort = true;
      }
      return;
    }
    for (int label = 1; label <= q_; ++label) {
      if (used_[label]) continue;
      place(depth, label);
      if (sh_.abort.load(std::memory_order_relaxed)) return;
    }
  }

  const Graph& g_;
  Shared& sh_;
  int q_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<int>> nb_;
  std::vector<std::vector<int>> done_at_;
  std::vector<int> labels_;
  std::vector<bool> used_;
  std::vector<Sum> sum_;
  std::vector<bool> complete_;
  std::vector<Sum> distinct_;
};

SearchResult search(const Graph& g, int initial_best, bool stop_at_first, const SearchBudget& budget) {
  if (g.edge_count() == 0) throw Error(ErrorKind::InvalidInput, "graph has no edges");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "local antimagic labelings need a connected graph");
  if (g.edge_count() > budget.max_edges) {
    throw Error(ErrorKind::OverBudget, std::to_string(g.edge_count()) + " edges exceeds the budget of " +
                                           std::to_string(budget.max_edges));
  }
  Shared sh;
  sh.best = initial_best;
  sh.stop_at_first = stop_at_first;
  sh.floor = chromatic_number(g);
  sh.start = Clock::now();
  sh.budget = &budget;

  const int q = g.edge_count();
  // Complement symmetry on regular graphs: the first label can stay in the lower half.
  const int first_max = g.is_regular() ? (q + 2) / 2 : q;
  std::atomic<int> next_label{1};
  auto worker = [&] {
    Search s(g, sh);
    for (int l = next_label++; l <= first_max && !sh.abort.load(); l = next_label++) s.run(l);
  };
  const int threads = std::max(1, std::min(budget.threads, first_max));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (sh.over) {
    throw Error(ErrorKind::OverBudget, "search exceeded its node or time limit after " +
                                           std::to_string(sh.nodes.load()) + " nodes");
  }
  SearchResult res;
  res.nodes = sh.nodes;
  res.seconds = std::chrono::duration<double>(Clock::now() - sh.start).count();
  if (sh.best < initial_best) {
    res.witness = sh.witness;
    res.chi_la = sh.best.load();
  }
  return res;
}

}  // namespace

SearchResult exact_chi_la(const Graph& g, const SearchBudget& budget) {
  auto res = search(g, g.vertex_count() + 1, false, budget);
  if (!res.witness) throw Error(ErrorKind::NotApplicable, "graph has no local antimagic labeling");
  return res;
}

SearchResult feasible_with_colors(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "colour bound must be >= 1");
  auto res = search(g, k + 1, true, budget);
  res.chi_la.reset();
  return res;
}

int enumerate_chi_la(const Graph& g) {
  if (g.edge_count() > 8) throw Error(ErrorKind::OverBudget, "enumeration is limited to 8 edges");
  EdgeLabeling f;
  f.labels.resize(g.edge_count());
  std::iota(f.labels.begin(), f.labels.end(), 1);
  int best = -1;
  do {
    const auto c = induced_coloring(g, f);
    if (c.conflicts.empty() && (best < 0 || static_cast<int>(c.colors.size()) < best)) {
      best = static_cast<int>(c.colors.size());
    }
  } while (std::next_permutation(f.labels.begin(), f.labels.end()));
  return best;
}

namespace {

// used: colours taken by vertices before v; v opens at most one new colour.
bool colour_with(const std::vector<std::vector<int>>& nb, std::vector<int>& col, int v, int k, int used) {
  if (v == static_cast<int>(nb.size())) return true;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool free = true;
    for (int w : nb[v]) {
      if (w < v && col.at(w) == c) free = false;
    }
    if (!free) continue;
    col[v] = c;
    if (colour_with(nb, col, v + 1, k, std::max(used, c + 1))) return true;
  }
  col[v] = -1;
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  const auto nb = g.neighbors();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, -1);
    if (colour_with(nb, col, 0, k, 0)) return k;
  }
  return n;
}

}  // namespace antimagic
