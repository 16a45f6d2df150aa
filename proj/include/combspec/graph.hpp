#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace combspec {

/// Unordered vertex pair stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 1..n; no loops, no multi-edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);
  /// Throws Error{invalid_argument} on loops, duplicates or out-of-range ends.
  SimpleGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  void add_edge(int a, int b);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t slot(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b - 1);
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
};

/// Shortest-path distances; pairs in different components are absent.
class DistanceTable {
 public:
  explicit DistanceTable(int n);
  int order() const { return n_; }
  std::optional<int> at(int a, int b) const;
  void set(int a, int b, int d);
  bool connected() const;

 private:
  std::size_t slot(int a, int b) const;

  int n_;
  std::vector<int> dist_;
};

// Edge-list text: "n m" then m lines "u v"; blank lines and '#' comments skipped.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

SimpleGraph parse_graph6(std::string_view line);
std::string to_graph6(const SimpleGraph& g);

/// Accepts either format: a first significant line holding a single token is
/// read as graph6, otherwise as an edge list.
SimpleGraph parse_graph(std::string_view text);
/// Like parse_graph, but a text made only of single-token lines yields one
/// graph per line.
std::vector<SimpleGraph> parse_graphs(std::string_view text);

DistanceTable all_pairs_distances(const SimpleGraph& g);
/// Sorted ascending.
std::vector<int> component_orders(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool has_isolated_vertex(const SimpleGraph& g);

SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
/// K_{1,n-1} centred on vertex 1.
SimpleGraph star_graph(int n);

}  // namespace combspec
