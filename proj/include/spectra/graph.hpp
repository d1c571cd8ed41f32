#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "spectra/error.hpp"

namespace spectra {

using Vertex = int;
using EdgeIndex = int;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// graph6 short form encodes up to 62 vertices; everything here is desk scale,
// so that is the hard cap for hosts and derived graphs alike.
inline constexpr int kMaxVertices = 62;

// Simple undirected graph with dense 0-based vertex indices.  Edge identity
// is the insertion index; labelings and spectra are keyed on it.  Loops and
// parallel edges are rejected at construction.  Disconnected or edgeless
// graphs are representable (induced subgraphs need both); operations that
// assume a connected host say so and throw when the assumption fails.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edge_pairs) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
      fail(errc::too_many_vertices,
           "vertex count " + std::to_string(vertex_count) + " outside [0, " +
               std::to_string(kMaxVertices) + "]");
    vertex_count_ = vertex_count;
    adjacency_.resize(static_cast<size_t>(vertex_count));
    edges_.reserve(edge_pairs.size());
    for (auto [a, b] : edge_pairs) add_edge(a, b);
  }

  // Host-graph constructor: vertex count inferred as 1 + max index, at least
  // one edge required.
  static Graph from_edge_list(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    if (pairs.empty()) fail(errc::empty_edge_set, "host graph needs at least one edge");
    Vertex max_index = 0;
    for (auto [a, b] : pairs) max_index = std::max({max_index, a, b});
    return Graph(max_index + 1, pairs);
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(EdgeIndex e) const {
    if (e < 0 || e >= edge_count())
      fail(errc::not_an_edge, "edge index " + std::to_string(e));
    return edges_[static_cast<size_t>(e)];
  }

  // (neighbor, edge index) pairs in edge-insertion order.
  const std::vector<std::pair<Vertex, EdgeIndex>>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    for (auto [w, e] : adjacency_[static_cast<size_t>(a)])
      if (w == b) return e;
    return std::nullopt;
  }

  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  std::vector<int> degrees() const {
    std::vector<int> out(static_cast<size_t>(vertex_count_));
    for (Vertex v = 0; v < vertex_count_; ++v)
      out[static_cast<size_t>(v)] = static_cast<int>(adjacency_[static_cast<size_t>(v)].size());
    return out;
  }

  VertexSet leaves() const {
    VertexSet out;
    for (Vertex v = 0; v < vertex_count_; ++v)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

  // Vertices of degree >= 2.
  VertexSet core_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < vertex_count_; ++v)
      if (degree(v) >= 2) out.push_back(v);
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
    return best;
  }

  // Connected components as sorted vertex sets, ordered by least member.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<size_t>(vertex_count_), 0);
    for (Vertex start = 0; start < vertex_count_; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      VertexSet comp;
      std::queue<Vertex> q;
      q.push(start);
      seen[static_cast<size_t>(start)] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        comp.push_back(v);
        for (auto [w, e] : neighbors(v)) {
          (void)e;
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            q.push(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_connected() const {
    if (vertex_count_ == 0) return true;
    return components().size() == 1;
  }

  // Acyclic <=> every component has |E| = |V| - 1, i.e. m = n - #components.
  bool is_forest() const {
    return edge_count() == vertex_count_ - static_cast<int>(components().size());
  }

  bool is_tree() const { return is_connected() && edge_count() == vertex_count_ - 1; }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count_)
      fail(errc::invalid_vertex, "vertex " + std::to_string(v) + " outside [0, " +
                                     std::to_string(vertex_count_) + ")");
  }

  void add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) fail(errc::loop_edge, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (has_edge(a, b))
      fail(errc::duplicate_edge,
           "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    EdgeIndex e = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back(Edge{a, b});
    adjacency_[static_cast<size_t>(a)].emplace_back(b, e);
    adjacency_[static_cast<size_t>(b)].emplace_back(a, e);
  }

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adjacency_;
};

// BFS distances from source; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.vertex_count())
    fail(errc::invalid_vertex, "BFS source " + std::to_string(source));
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<Vertex> q;
  dist[static_cast<size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (auto [w, e] : g.neighbors(v)) {
      (void)e;
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline int distance(const Graph& g, Vertex x, Vertex y) {
  auto dist = bfs_distances(g, x);
  if (y < 0 || y >= g.vertex_count()) fail(errc::invalid_vertex, "distance target");
  int d = dist[static_cast<size_t>(y)];
  if (d < 0)
    fail(errc::unreachable, "no path from " + std::to_string(x) + " to " + std::to_string(y));
  return d;
}

struct DiameterInfo {
  int diameter = 0;
  // Vertices whose eccentricity equals the diameter.
  VertexSet peripherals;
};

// Requires a connected graph (throws Unreachable otherwise).
inline DiameterInfo diameter_and_peripherals(const Graph& g) {
  if (g.vertex_count() == 0) fail(errc::unreachable, "empty graph has no diameter");
  std::vector<int> ecc(static_cast<size_t>(g.vertex_count()), 0);
  int diameter = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (dist[static_cast<size_t>(w)] < 0)
        fail(errc::unreachable, "graph is disconnected");
      ecc[static_cast<size_t>(v)] = std::max(ecc[static_cast<size_t>(v)], dist[static_cast<size_t>(w)]);
    }
    diameter = std::max(diameter, ecc[static_cast<size_t>(v)]);
  }
  DiameterInfo info;
  info.diameter = diameter;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (ecc[static_cast<size_t>(v)] == diameter) info.peripherals.push_back(v);
  return info;
}

struct InducedSubgraph {
  Graph graph;
  // New vertex index -> vertex index in the parent graph (ascending).
  std::vector<Vertex> vertex_to_parent;
  // New edge index -> edge index in the parent graph (ascending).
  std::vector<EdgeIndex> edge_to_parent;
};

// Subgraph induced by s: the vertices of s and every parent edge with both
// ends in s, edges kept in parent edge-index order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> position(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    Vertex v = verts[i];
    if (v < 0 || v >= g.vertex_count())
      fail(errc::invalid_vertex, "induced subgraph vertex " + std::to_string(v));
    position[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edge_pairs;
  std::vector<EdgeIndex> edge_map;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    int pu = position[static_cast<size_t>(ed.u)];
    int pv = position[static_cast<size_t>(ed.v)];
    if (pu >= 0 && pv >= 0) {
      edge_pairs.emplace_back(pu, pv);
      edge_map.push_back(e);
    }
  }
  return InducedSubgraph{Graph(static_cast<int>(verts.size()), std::move(edge_pairs)),
                         std::move(verts), std::move(edge_map)};
}

}  // namespace spectra
