#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abc {

using Vertex = int;  // 1-based; label order is the lexicographic order
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  /// Edges are normalized to (min, max) and sorted. Loops, repeated edges and
  /// out-of-range endpoints throw PreconditionError.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v - 1].size()); }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= num_vertices_; }
  bool is_regular(int degree) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// `graph 1` format.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(std::string_view text);
void write_graph(std::ostream& out, const Graph& g);

/// Repeatedly delete a maximum-degree vertex (smallest label on ties).
std::vector<Vertex> ovr_deletion_order(const Graph& g);

/// Are at least `k` vertices left after `v` is deleted?
bool ovr_decide(const Graph& g, Vertex v, int k);

/// Lexicographically first maximal independent set, ascending.
std::vector<Vertex> lfmis(const Graph& g);

struct Regularized {
  Graph graph;
  Vertex vertex;
};

/// Attaches 5-vertex gadgets (a 5-cycle with two chords, one degree-2 vertex
/// wired to the host) until every vertex has degree 3. Gadget labels follow all
/// original labels, so the greedy LFMIS scan over original vertices is unchanged.
Regularized regularize_to_3(const Graph& g, Vertex v);

}  // namespace abc
