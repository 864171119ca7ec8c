#pragma once

// Cycle C-labelings, their translates along Gamma_a cycles, and the combined
// three-colour labeling of even-order circulants.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// The m-cycle (0, a, 2a, ..., (m-1)a) of Z_m.
struct GammaCycle {
  int m = 0;
  int step = 0;
  std::vector<int> vertices;
};

GammaCycle gamma_cycle(int m, int a);

// Label of edge v_j v_{j+1} under the C-labeling of C_m.
int c_label(int m, int j);

// C-labeling of build_cycle(m): sums floor(m/2)+2 at v_0, m+1 at odd and m+2
// at even vertices.
EdgeLabeling c_labeling(int m);

// The C-labeling carried along Gamma_a and shifted by i*m.
struct TranslatedLabeling {
  GammaCycle cycle;
  std::vector<int> labels;  // labels[j] sits on (vertices[j], vertices[j+1])
  std::vector<Sum> sums;    // indexed by vertex of Z_m
};

TranslatedLabeling translated_labeling(int m, int a, int i);

// Closed-form sums of the combined labeling on C_{2n}(1, a_1, ..., a_t).
struct CirculantSums {
  Sum hub = 0;   // vertex 0
  Sum odd = 0;   // odd vertices
  Sum even = 0;  // even vertices other than 0
};

CirculantSums circulant_closed_forms(int m, int t);

// Labels the i-th step's cycle with f_i.  Requires even m, a_0 = 1 and odd
// steps coprime to m; odd moduli are refused.
LabeledGraph circulant_labeling(const CirculantSpec& spec);

// Reduces a step to its representative in [1, m/2].
int normalize_step(int step, int m);

// Certifies that i -> b*i mod n carries C_n(from) onto C_n(to) edge by edge.
std::optional<std::vector<int>> certify_multiplier(int n, std::span<const int> from, std::span<const int> to,
                                                   int b);

// Certified map from C_n(1,a) onto C_n(1,b') where b' is b normalized; needs
// a*b = +-1 (mod n), otherwise NotApplicable.
std::vector<int> multiplier_isomorphism(int n, int a, int b);

// lambda_j = sum over steps of 2 cos(2 pi a j / m), j = 0..m-1.
std::vector<double> circulant_spectrum(const CirculantSpec& spec);

bool same_spectrum(std::vector<double> x, std::vector<double> y, double tol = 1e-9);

struct LabelingMatrixView {
  int n = 0;
  std::vector<std::optional<int>> cells;  // row-major n x n
  std::vector<Sum> row_sums;

  const std::optional<int>& at(int u, int v) const { return cells[static_cast<std::size_t>(u) * n + v]; }
};

// Refuses graphs with parallel edges.
LabelingMatrixView labeling_matrix_view(const Graph& g, const EdgeLabeling& f);

// Aligned text: header of column indices, '*' for absent entries, trailing Sum column.
std::string render_matrix(const LabelingMatrixView& view);

}  // namespace antimagic
