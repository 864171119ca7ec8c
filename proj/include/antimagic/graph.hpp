#pragma once

// Undirected loop-free multigraphs with stable vertex and edge indices.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antimagic {

struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);
  // provenance[v] lists the original vertex identifiers folded into v.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> provenance);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;
  const std::vector<std::vector<int>>& provenance() const { return provenance_; }
  const std::vector<int>& provenance(int v) const { return provenance_.at(v); }

  int degree(int v) const;
  std::vector<int> degrees() const;
  // Edge indices incident to each vertex, in edge order.
  std::vector<std::vector<int>> incident_edges() const;
  // Distinct neighbours of each vertex, sorted; parallel edges collapse.
  std::vector<std::vector<int>> neighbors() const;
  // Dense edge-multiplicity matrix.
  std::vector<std::vector<int>> multiplicity_matrix() const;

  bool is_simple() const;
  bool is_connected() const;
  bool is_regular() const;

  // Display name of a vertex built from its provenance, e.g. "v0,8".
  std::string vertex_name(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> provenance_;
};

// C_m(a_0, ..., a_t): modulus m and strictly increasing steps in [1, ceil(m/2)).
struct CirculantSpec {
  int m = 0;
  std::vector<int> steps;

  // Throws InvalidSpec / UnsupportedStep.
  void validate() const;
  std::string name() const;
  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

enum class BlockKind { A, B, C };

// Partition of the vertices of an n-cycle into merge blocks.  A-blocks hold
// even indices only, B-blocks odd indices only, C-blocks are unrestricted.
struct MergePlan {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<BlockKind> kinds;

  static MergePlan identity(int n);
  // Sorts each block and the block list by smallest member.
  void normalize();
  // Throws InvalidPlan on a non-partition or a block/kind mismatch.
  void validate() const;
};

Graph build_cycle(int m);
Graph build_path(int vertex_count);
Graph build_circulant(const CirculantSpec& spec);
Graph complete_bipartite(int a, int b);

// Identifies the members of every block.  Merged vertices are numbered by the
// rank of their smallest member; edges keep their indices.
Graph merge_vertices(const Graph& g, std::span<const std::vector<int>> blocks);
Graph merge_vertices(const Graph& g, const MergePlan& plan);

// Disjoint union with the attach vertices identified.  The central vertex is
// vertex 0; the remaining vertices follow graph by graph in original order.
Graph one_point_union(std::span<const Graph> graphs, std::span<const int> attach);

// Removes edge e; later edges shift down by one and keep their relative order.
Graph delete_edge(const Graph& g, int e);

// A proper k-colouring (k = 2 or 3) as k independent sets, or nullopt.
std::optional<std::vector<std::vector<int>>> partite_classes(const Graph& g, int k);

bool has_triangle(const Graph& g);

// Vertex bijection phi with mult_g1(u,v) == mult_g2(phi(u), phi(v)), or nullopt.
std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2);

// True iff mapping g1's vertices through phi yields g2's edge multiset.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> phi);

int gcd(int a, int b);

}  // namespace antimagic
