#pragma once

#include <Eigen/Dense>
#include <set>
#include <utility>
#include <vector>

namespace netopt {

/// Directed communication topology. Vertices are agents (0-based
/// internally; config files use 1-based ids). Immutable once built, so
/// graphs can be shared read-only across replicas.
class Digraph {
public:
  explicit Digraph(int vertex_count);
  Digraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  /// Inserts (from, to). Self-loops are rejected; duplicates are no-ops.
  void add_edge(int from, int to);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int from, int to) const;

  /// Edges in ascending (from, to) order.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;

  /// Symmetrized edge set (the undirected support).
  Digraph undirected_support() const;

  bool operator==(const Digraph& other) const;

private:
  void check_vertex(int v) const;

  int vertex_count_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// True iff every ordered vertex pair is connected by a directed path.
bool is_strongly_connected(const Digraph& g);

/// Edge-set union; all graphs must share the vertex count.
Digraph union_graph(const std::vector<Digraph>& gs);

/// Graph Laplacian of the undirected support, expanded blockwise so it
/// acts on the appended decision vector (block_dim components per agent).
/// Symmetric positive semi-definite with zero row sums.
Eigen::MatrixXd laplacian(const Digraph& g, int block_dim = 1);

/// BFS hop count from `from` to `to`; -1 if unreachable.
int shortest_path_length(const Digraph& g, int from, int to);

/// Vertices of one shortest path from `from` to `to`; empty if unreachable.
std::vector<int> shortest_path(const Digraph& g, int from, int to);

/// Max over ordered pairs of shortest-path length; -1 if not strongly
/// connected.
int diameter(const Digraph& g);

}  // namespace netopt
