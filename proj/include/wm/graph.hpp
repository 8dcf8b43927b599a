#ifndef WM_GRAPH_HPP
#define WM_GRAPH_HPP

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wm/common.hpp"

namespace wm {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loopless graph on at least two integer-labelled
/// vertices. Immutable; stored in canonical form (labels ascending, edges
/// lexicographic with the smaller endpoint first). The cone apex is label 0.
class Graph {
 public:
  Graph(std::vector<Vertex> labels, std::vector<Edge> edges);

  /// Vertices 1..n with the given edges.
  static Graph on_range(int n, std::vector<Edge> edges);

  const std::vector<Vertex>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int order() const { return static_cast<int>(labels_.size()); }
  VertexSet vertices() const { return vertices_; }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return has_vertex(adjacency_[u], v); }
  bool has_apex() const { return has_vertex(vertices_, 0); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> labels_;
  std::vector<Edge> edges_;
  VertexSet vertices_ = 0;
  std::array<VertexSet, kMaxLabel + 1> adjacency_{};
};

/// Accepts the JSON form {"n":N,"edges":[[i,j],...]} (optionally with an
/// explicit "labels" array) or a family string such as "complete:4" or
/// "cone:path:3".
Graph parse_graph(std::string_view text);

/// Family strings: complete:N, path:N, cycle:N, edgeless:N,
/// disjoint-complete:N,M and cone:<family>.
Graph make_family(std::string_view spec);

/// Canonical JSON text of g.
std::string serialize_graph(const Graph& g);

Graph cone(const Graph& g);

/// True iff s is non-empty, within g and induces a connected subgraph.
bool is_connected_induced(const Graph& g, VertexSet s);

/// The graph on 1..n whose edges are the pairs selected by mask, pairs
/// indexed lexicographically: (1,2),(1,3),...,(n-1,n).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Number of vertex pairs of an n-vertex graph.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Uniformly random labelled graph on 1..n.
Graph random_graph(int n, std::mt19937_64& rng);

}  // namespace wm

#endif  // WM_GRAPH_HPP
