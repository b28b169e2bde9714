#include "abc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "abc/election.hpp"

namespace abc {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) throw PreconditionError("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (u < 1 || v > num_vertices_) throw PreconditionError("edge endpoint outside [1, " + std::to_string(num_vertices_) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw PreconditionError("repeated edge");
  adjacency_.assign(num_vertices_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::is_regular(int d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& a) { return static_cast<int>(a.size()) == d; });
}

namespace {

int header_value(std::istream& in, std::string_view key, int line) {
  std::string raw;
  if (!std::getline(in, raw)) throw ParseError(line, "missing '" + std::string(key) + ":' header");
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  const std::string prefix = std::string(key) + ":";
  if (raw.rfind(prefix, 0) != 0) throw ParseError(line, "expected '" + prefix + " <n>'");
  std::istringstream rest(raw.substr(prefix.size()));
  int value = 0;
  std::string trailing;
  if (!(rest >> value) || (rest >> trailing)) throw ParseError(line, "expected an integer after '" + prefix + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  if (!std::getline(in, raw) || (raw != "graph 1" && raw != "graph 1\r")) throw ParseError(1, "expected header 'graph 1'");
  const int n = header_value(in, "vertices", 2);
  const int e = header_value(in, "edges", 3);
  if (n < 1) throw ParseError(2, "vertex count must be positive");
  if (e < 0) throw ParseError(3, "edge count must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i < e; ++i) {
    const int line = 4 + i;
    if (!std::getline(in, raw)) throw ParseError(line, "expected " + std::to_string(e) + " edges");
    std::istringstream tokens(raw);
    int u = 0;
    int v = 0;
    std::string trailing;
    if (!(tokens >> u >> v) || (tokens >> trailing)) throw ParseError(line, "expected 'u v'");
    if (!(1 <= u && u < v && v <= n)) throw ParseError(line, "edge must satisfy 1 <= u < v <= " + std::to_string(n));
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const PreconditionError& err) {
    throw ParseError(0, err.what());
  }
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph 1\nvertices: " << g.num_vertices() << "\nedges: " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<Vertex> ovr_deletion_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> degree(n + 1);
  for (Vertex v = 1; v <= n; ++v) degree[v] = g.degree(v);
  std::vector<bool> deleted(n + 1, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!deleted[v] && (best == 0 || degree[v] > degree[best])) best = v;
    }
    deleted[best] = true;
    for (Vertex u : g.neighbors(best)) {
      if (!deleted[u]) --degree[u];
    }
    order.push_back(best);
  }
  return order;
}

bool ovr_decide(const Graph& g, Vertex v, int k) {
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
  const auto order = ovr_deletion_order(g);
  const auto position = std::find(order.begin(), order.end(), v) - order.begin() + 1;
  return g.num_vertices() - position >= k;
}

std::vector<Vertex> lfmis(const Graph& g) {
  std::vector<bool> blocked(g.num_vertices() + 1, false);
  std::vector<Vertex> picked;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (blocked[v]) continue;
    picked.push_back(v);
    for (Vertex u : g.neighbors(v)) blocked[u] = true;
  }
  return picked;
}

Regularized regularize_to_3(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
  std::vector<Edge> edges = g.edges();
  int next = g.num_vertices() + 1;
  for (Vertex host = 1; host <= g.num_vertices(); ++host) {
    const int deg = g.degree(host);
    if (deg > 3) throw PreconditionError("vertex " + std::to_string(host) + " has degree " + std::to_string(deg) + " > 3");
    for (int gadget = 0; gadget < 3 - deg; ++gadget) {
      const Vertex g1 = next, g2 = next + 1, g3 = next + 2, g4 = next + 3, g5 = next + 4;
      next += 5;
      edges.insert(edges.end(), {{g1, g2}, {g2, g3}, {g3, g4}, {g4, g5}, {g1, g5}, {g1, g3}, {g2, g4}, {host, g5}});
    }
  }
  return {Graph(next - 1, std::move(edges)), v};
}

}  // namespace abc
