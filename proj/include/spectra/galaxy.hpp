#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/graph.hpp"
#include "spectra/labeling.hpp"

namespace spectra {

// A galaxy is either K2 or a tree built from a spine path x_1..x_n (n >= 3)
// whose internal vertices carry pendant leaves: a_i pendants at x_{i+1} for
// the count sequence A = (a_1, ..., a_{n-2}).  Equivalently (for >= 3
// vertices): a tree whose leaf-deleted graph is a path.

enum class GalaxyKind { K2, Spine };

struct GalaxyDecomposition {
  GalaxyKind kind = GalaxyKind::Spine;
  // Spine vertices in order; for K2, the two vertices.  n = spine.size().
  std::vector<Vertex> spine;
  // A, canonicalized to the lexicographically smaller of A and reverse(A).
  std::vector<int> pendant_counts;
  // pendants[i] = pendant leaves at spine position i+1 (the i-th internal
  // vertex), sorted ascending.  Empty for K2.
  std::vector<std::vector<Vertex>> pendants;

  int spine_length() const { return static_cast<int>(spine.size()); }
};

struct BuiltGalaxy {
  Graph graph;
  GalaxyDecomposition decomposition;
};

namespace detail {

// Reverse a decomposition in place (spine direction flip).
inline void reverse_decomposition(GalaxyDecomposition& d) {
  std::reverse(d.spine.begin(), d.spine.end());
  std::reverse(d.pendant_counts.begin(), d.pendant_counts.end());
  std::reverse(d.pendants.begin(), d.pendants.end());
}

// Canonical orientation: pendant counts lex-minimal, ties broken by the
// lex-smaller spine sequence.
inline void canonicalize_decomposition(GalaxyDecomposition& d) {
  GalaxyDecomposition r = d;
  reverse_decomposition(r);
  if (r.pendant_counts < d.pendant_counts ||
      (r.pendant_counts == d.pendant_counts && r.spine < d.spine))
    d = std::move(r);
}

}  // namespace detail

// Construct the galaxy for pendant counts A (|A| >= 1, entries >= 0).
// Vertices: spine 0..n-1 in order, then pendant blocks for each internal
// spine vertex in increasing position.  Edges: the n-1 spine edges first,
// then pendant edges grouped the same way.
inline BuiltGalaxy build_galaxy(const std::vector<int>& pendant_counts) {
  if (pendant_counts.empty())
    fail(errc::empty_sequence, "galaxy needs at least one pendant count");
  for (int a : pendant_counts)
    if (a < 0) fail(errc::empty_sequence, "negative pendant count");
  int n = static_cast<int>(pendant_counts.size()) + 2;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);

  GalaxyDecomposition d;
  d.kind = GalaxyKind::Spine;
  for (Vertex i = 0; i < n; ++i) d.spine.push_back(i);
  d.pendant_counts = pendant_counts;
  Vertex next = n;
  for (size_t i = 0; i < pendant_counts.size(); ++i) {
    std::vector<Vertex> block;
    for (int j = 0; j < pendant_counts[i]; ++j) {
      edges.emplace_back(static_cast<Vertex>(i) + 1, next);
      block.push_back(next);
      ++next;
    }
    d.pendants.push_back(std::move(block));
  }
  detail::canonicalize_decomposition(d);
  return BuiltGalaxy{Graph(next, std::move(edges)), std::move(d)};
}

// K2, or a tree on >= 3 vertices whose non-leaf vertices induce a path.
// Throws Disconnected for disconnected input; K1 is simply not a galaxy.
inline bool is_galaxy(const Graph& h) {
  if (!h.is_connected()) fail(errc::disconnected, "galaxy test on disconnected graph");
  int n = h.vertex_count();
  if (n == 2) return h.edge_count() == 1;
  if (n < 3 || h.edge_count() != n - 1) return false;
  auto core = induced_subgraph(h, h.core_vertices());
  // Leaf-deleting a tree with >= 3 vertices leaves a nonempty tree; it is a
  // path iff no vertex keeps degree >= 3.
  return core.graph.vertex_count() >= 1 && core.graph.is_tree() &&
         core.graph.max_degree() <= 2;
}

namespace detail {

inline Vertex farthest_vertex(const std::vector<int>& dist) {
  Vertex best = 0;
  for (size_t v = 0; v < dist.size(); ++v)
    if (dist[v] > dist[static_cast<size_t>(best)]) best = static_cast<Vertex>(v);
  return best;  // smallest index wins ties
}

}  // namespace detail

// Recover spine and pendant structure from a galaxy.  The spine is a longest
// path found by double BFS (endpoint ties resolved toward the smallest
// vertex index); orientation is canonicalized as in build_galaxy.
inline GalaxyDecomposition decompose_galaxy(const Graph& h) {
  if (!is_galaxy(h)) fail(errc::not_a_galaxy, "decompose needs a galaxy");
  GalaxyDecomposition d;
  if (h.vertex_count() == 2) {
    d.kind = GalaxyKind::K2;
    d.spine = {0, 1};
    return d;
  }
  d.kind = GalaxyKind::Spine;
  Vertex u = detail::farthest_vertex(bfs_distances(h, 0));
  auto dist_u = bfs_distances(h, u);
  Vertex w = detail::farthest_vertex(dist_u);
  // Unique tree path u -> w, walked backwards from w by descending distance.
  std::vector<Vertex> spine{w};
  Vertex cur = w;
  while (cur != u) {
    for (auto [nbr, e] : h.neighbors(cur)) {
      (void)e;
      if (dist_u[static_cast<size_t>(nbr)] == dist_u[static_cast<size_t>(cur)] - 1) {
        cur = nbr;
        break;
      }
    }
    spine.push_back(cur);
  }
  std::reverse(spine.begin(), spine.end());

  std::vector<char> on_spine(static_cast<size_t>(h.vertex_count()), 0);
  for (Vertex v : spine) on_spine[static_cast<size_t>(v)] = 1;
  for (size_t i = 1; i + 1 < spine.size(); ++i) {
    std::vector<Vertex> block;
    for (auto [nbr, e] : h.neighbors(spine[i])) {
      (void)e;
      if (!on_spine[static_cast<size_t>(nbr)]) block.push_back(nbr);
    }
    std::sort(block.begin(), block.end());
    d.pendant_counts.push_back(static_cast<int>(block.size()));
    d.pendants.push_back(std::move(block));
  }
  d.spine = std::move(spine);
  detail::canonicalize_decomposition(d);
  return d;
}

// The walk labeling that makes every vertex spectrum an interval: label the
// first spine edge 1, then at each internal spine vertex hand the next
// consecutive values to its pendant edges (edge-index order) and the next
// one to the outgoing spine edge.
inline Labeling galaxy_labeling(const Graph& h) {
  GalaxyDecomposition d = decompose_galaxy(h);
  if (d.kind == GalaxyKind::K2) return Labeling::identity(1);
  std::vector<int> labels(static_cast<size_t>(h.edge_count()), 0);
  int next = 1;
  auto edge_between = [&](Vertex a, Vertex b) {
    auto e = h.find_edge(a, b);
    if (!e) fail(errc::broken_invariant, "spine edge missing");
    return *e;
  };
  labels[static_cast<size_t>(edge_between(d.spine[0], d.spine[1]))] = next++;
  for (size_t i = 1; i + 1 < d.spine.size(); ++i) {
    std::vector<EdgeIndex> pendant_edges;
    for (Vertex p : d.pendants[i - 1]) pendant_edges.push_back(edge_between(d.spine[i], p));
    std::sort(pendant_edges.begin(), pendant_edges.end());
    for (EdgeIndex e : pendant_edges) labels[static_cast<size_t>(e)] = next++;
    labels[static_cast<size_t>(edge_between(d.spine[i], d.spine[i + 1]))] = next++;
  }
  return Labeling::bijective_unchecked(std::move(labels));
}

}  // namespace spectra
