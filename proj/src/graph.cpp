#include "netopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace netopt {

Digraph::Digraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("Digraph: vertex_count must be >= 1");
  out_.resize(vertex_count_);
  in_.resize(vertex_count_);
}

Digraph::Digraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : Digraph(vertex_count) {
  for (const auto& [from, to] : edges) add_edge(from, to);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("Digraph: vertex out of range");
}

void Digraph::add_edge(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) throw std::invalid_argument("Digraph: self-loops are not allowed");
  if (!edges_.insert({from, to}).second) return;
  out_[from].insert(std::lower_bound(out_[from].begin(), out_[from].end(), to), to);
  in_[to].insert(std::lower_bound(in_[to].begin(), in_[to].end(), from), from);
}

bool Digraph::has_edge(int from, int to) const {
  return edges_.count({from, to}) > 0;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  return {edges_.begin(), edges_.end()};
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

Digraph Digraph::undirected_support() const {
  Digraph g(vertex_count_);
  for (const auto& [from, to] : edges_) {
    g.add_edge(from, to);
    g.add_edge(to, from);
  }
  return g;
}

bool Digraph::operator==(const Digraph& other) const {
  return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
}

namespace {

// Vertices reachable from `start` along directed edges.
std::vector<bool> reachable_from(const Digraph& g, int start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.out_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto seen = reachable_from(g, v);
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

Digraph union_graph(const std::vector<Digraph>& gs) {
  if (gs.empty()) throw std::invalid_argument("union_graph: empty list");
  const int n = gs.front().vertex_count();
  Digraph u(n);
  for (const auto& g : gs) {
    if (g.vertex_count() != n)
      throw std::invalid_argument("union_graph: mismatched vertex counts");
    for (const auto& [from, to] : g.edges()) u.add_edge(from, to);
  }
  return u;
}

Eigen::MatrixXd laplacian(const Digraph& g, int block_dim) {
  if (block_dim < 1) throw std::invalid_argument("laplacian: block_dim must be >= 1");
  const int n = g.vertex_count();
  const Digraph und = g.undirected_support();
  Eigen::MatrixXd small = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [from, to] : und.edges()) {
    if (from < to) {
      small(from, from) += 1.0;
      small(to, to) += 1.0;
      small(from, to) -= 1.0;
      small(to, from) -= 1.0;
    }
  }
  if (block_dim == 1) return small;
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(n * block_dim, n * block_dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (small(i, j) != 0.0)
        big.block(i * block_dim, j * block_dim, block_dim, block_dim) =
            small(i, j) * Eigen::MatrixXd::Identity(block_dim, block_dim);
  return big;
}

std::vector<int> shortest_path(const Digraph& g, int from, int to) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : g.out_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  if (path.front() != from) return {};
  return path;
}

int shortest_path_length(const Digraph& g, int from, int to) {
  if (from == to) return 0;
  const auto path = shortest_path(g, from, to);
  return path.empty() ? -1 : static_cast<int>(path.size()) - 1;
}

int diameter(const Digraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (v == w) continue;
      const int l = shortest_path_length(g, v, w);
      if (l < 0) return -1;
      best = std::max(best, l);
    }
  return best;
}

}  // namespace netopt
