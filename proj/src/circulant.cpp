#include "antimagic/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "antimagic/error.hpp"

namespace antimagic {

GammaCycle gamma_cycle(int m, int a) {
  if (m < 3) throw Error(ErrorKind::InvalidOrder, "cycle order must be >= 3");
  if (a <= 0 || gcd(a, m) != 1) {
    throw Error(ErrorKind::UnsupportedStep, "step " + std::to_string(a) + " does not generate Z_" + std::to_string(m));
  }
  GammaCycle c{m, a, {}};
  c.vertices.reserve(m);
  for (int j = 0; j < m; ++j) c.vertices.push_back(static_cast<int>((1LL * j * a) % m));
  return c;
}

int c_label(int m, int j) { return j % 2 == 0 ? (j + 2) / 2 : m - (j - 1) / 2; }

EdgeLabeling c_labeling(int m) {
  if (m < 3) throw Error(ErrorKind::InvalidOrder, "cycle order must be >= 3, got " + std::to_string(m));
  EdgeLabeling f;
  f.labels.reserve(m);
  for (int j = 0; j < m; ++j) f.labels.push_back(c_label(m, j));
  return f;
}

TranslatedLabeling translated_labeling(int m, int a, int i) {
  if (i < 0) throw Error(ErrorKind::InvalidInput, "translation index must be >= 0");
  TranslatedLabeling out{gamma_cycle(m, a), {}, std::vector<Sum>(m, 0)};
  for (int j = 0; j < m; ++j) {
    const int label = c_label(m, j) + i * m;
    out.labels.push_back(label);
    out.sums[out.cycle.vertices[j]] += label;
    out.sums[out.cycle.vertices[(j + 1) % m]] += label;
  }
  return out;
}

CirculantSums circulant_closed_forms(int m, int t) {
  if (m % 2 != 0) throw Error(ErrorKind::Precondition, "closed forms hold for even order only");
  const Sum n = m / 2;
  const Sum k = t + 1;
  return {k * (2 * n * t + n + 2), k * (2 * n * t + 2 * n + 1), k * (2 * n * t + 2 * n + 2)};
}

LabeledGraph circulant_labeling(const CirculantSpec& spec) {
  spec.validate();
  if (spec.m % 2 != 0) {
    throw Error(ErrorKind::Precondition,
                "odd order " + std::to_string(spec.m) +
                    ": translated C-labelings are not local antimagic in general (e.g. C_9(1,2), C_9(1,2,4))");
  }
  if (spec.steps.front() != 1) throw Error(ErrorKind::InvalidSpec, "first step must be 1");
  LabeledGraph out{build_circulant(spec), {}};
  out.labeling.labels.reserve(out.graph.edge_count());
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    for (int j = 0; j < spec.m; ++j) out.labeling.labels.push_back(c_label(spec.m, j) + static_cast<int>(i) * spec.m);
  }
  return out;
}

int normalize_step(int step, int m) {
  int s = ((step % m) + m) % m;
  return std::min(s, m - s);
}

std::optional<std::vector<int>> certify_multiplier(int n, std::span<const int> from, std::span<const int> to, int b) {
  if (n < 3) throw Error(ErrorKind::InvalidOrder, "modulus must be >= 3");
  if (gcd(((b % n) + n) % n, n) != 1) return std::nullopt;
  auto normalized = [n](std::span<const int> steps) {
    std::vector<int> out;
    for (int s : steps) out.push_back(normalize_step(s, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  const CirculantSpec source{n, normalized(from)};
  const CirculantSpec target{n, normalized(to)};
  const Graph g1 = build_circulant(source);
  const Graph g2 = build_circulant(target);
  std::vector<int> phi(n);
  for (int i = 0; i < n; ++i) phi[i] = static_cast<int>(((1LL * i * b) % n + n) % n);
  if (!is_isomorphism(g1, g2, phi)) return std::nullopt;
  return phi;
}

std::vector<int> multiplier_isomorphism(int n, int a, int b) {
  if (gcd(a, n) != 1) throw Error(ErrorKind::UnsupportedStep, "step not coprime to modulus");
  const long long ab = ((1LL * a * b) % n + n) % n;
  if (ab != 1 && ab != n - 1) {
    throw Error(ErrorKind::NotApplicable, std::to_string(a) + "*" + std::to_string(b) + " is not +-1 mod " +
                                              std::to_string(n));
  }
  const int from[] = {1, a};
  const int to[] = {1, b};
  auto phi = certify_multiplier(n, from, to, b);
  if (!phi) throw Error(ErrorKind::ConstructionFailure, "multiplier map failed edge certification");
  return *phi;
}

std::vector<double> circulant_spectrum(const CirculantSpec& spec) {
  spec.validate();
  std::vector<double> eig(spec.m, 0.0);
  for (int j = 0; j < spec.m; ++j) {
    for (int a : spec.steps) {
      // Reduce a*j mod m first so the angle stays small and exact-ish.
      const long long r = (1LL * a * j) % spec.m;
      eig[j] += 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / spec.m);
    }
  }
  return eig;
}

bool same_spectrum(std::vector<double> x, std::vector<double> y, double tol) {
  if (x.size() != y.size()) return false;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

LabelingMatrixView labeling_matrix_view(const Graph& g, const EdgeLabeling& f) {
  require_bijection(g, f);
  if (!g.is_simple()) throw Error(ErrorKind::Precondition, "labeling matrix needs a simple graph");
  LabelingMatrixView view;
  view.n = g.vertex_count();
  view.cells.assign(static_cast<std::size_t>(view.n) * view.n, std::nullopt);
  view.row_sums.assign(view.n, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    view.cells[static_cast<std::size_t>(e.u) * view.n + e.v] = f.labels[i];
    view.cells[static_cast<std::size_t>(e.v) * view.n + e.u] = f.labels[i];
    view.row_sums[e.u] += f.labels[i];
    view.row_sums[e.v] += f.labels[i];
  }
  return view;
}

std::string render_matrix(const LabelingMatrixView& view) {
  std::size_t width = std::to_string(std::max(view.n - 1, 0)).size();
  for (const auto& c : view.cells) {
    if (c) width = std::max(width, std::to_string(*c).size());
  }
  const std::size_t row_width = std::to_string(std::max(view.n - 1, 0)).size();
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream os;
  os << pad("", row_width) << " |";
  for (int v = 0; v < view.n; ++v) os << ' ' << pad(std::to_string(v), width);
  os << " | Sum\n";
  for (int u = 0; u < view.n; ++u) {
    os << pad(std::to_string(u), row_width) << " |";
    for (int v = 0; v < view.n; ++v) {
      const auto& c = view.at(u, v);
      os << ' ' << pad(c ? std::to_string(*c) : "*", width);
    }
    os << " | " << view.row_sums[u] << '\n';
  }
  return os.str();
}

}  // namespace antimagic
