#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/graph.hpp"
#include "spectra/labeling.hpp"

namespace spectra {

enum class Direction { Ascending, Descending };

inline const char* direction_name(Direction d) {
  return d == Direction::Ascending ? "ascending" : "descending";
}

// A directed simple path through interval vertices whose edge labels chain
// the spectra taken in the interval-induced subgraph: ascending means every
// edge label is the greatest induced-spectrum value of its source and the
// least of its target (descending is the mirror).  Labels are therefore
// strictly monotone along the path.
struct GradientPath {
  std::vector<Vertex> vertices;  // host indices, length >= 2
  Direction direction = Direction::Ascending;
  std::vector<int> edge_labels;

  friend bool operator==(const GradientPath&, const GradientPath&) = default;
};

struct GradientPathSet {
  std::vector<GradientPath> paths;
  bool truncated = false;
};

namespace detail {

// Per-vertex view of the interval-induced subgraph: least/greatest incident
// label and the neighbor carrying it.  Only meaningful for interval vertices
// with at least one interval neighbor.
struct GradientContext {
  std::vector<char> in_u;
  std::vector<int> lo, hi;                  // induced spectrum ends
  std::vector<Vertex> lo_partner, hi_partner;  // other endpoint of those edges
  bool empty_u = true;
};

inline GradientContext make_gradient_context(const Graph& g, const Labeling& f) {
  GradientContext ctx;
  size_t n = static_cast<size_t>(g.vertex_count());
  ctx.in_u.assign(n, 0);
  ctx.lo.assign(n, 0);
  ctx.hi.assign(n, 0);
  ctx.lo_partner.assign(n, -1);
  ctx.hi_partner.assign(n, -1);
  VertexSet u = interval_vertices(g, f);
  ctx.empty_u = u.empty();
  for (Vertex v : u) ctx.in_u[static_cast<size_t>(v)] = 1;
  for (Vertex v : u) {
    for (auto [w, e] : g.neighbors(v)) {
      if (!ctx.in_u[static_cast<size_t>(w)]) continue;
      int label = f[e];
      size_t sv = static_cast<size_t>(v);
      if (ctx.lo_partner[sv] < 0 || label < ctx.lo[sv]) {
        ctx.lo[sv] = label;
        ctx.lo_partner[sv] = w;
      }
      if (ctx.hi_partner[sv] < 0 || label > ctx.hi[sv]) {
        ctx.hi[sv] = label;
        ctx.hi_partner[sv] = w;
      }
    }
  }
  return ctx;
}

inline std::optional<Direction> trivial_direction(const GradientContext& ctx, int label,
                                                  Vertex x0, Vertex x1) {
  if (!ctx.in_u[static_cast<size_t>(x0)] || !ctx.in_u[static_cast<size_t>(x1)])
    return std::nullopt;
  bool asc = label == ctx.hi[static_cast<size_t>(x0)] && label == ctx.lo[static_cast<size_t>(x1)];
  bool desc = label == ctx.lo[static_cast<size_t>(x0)] && label == ctx.hi[static_cast<size_t>(x1)];
  if (asc) return Direction::Ascending;  // ties recorded once, ascending
  if (desc) return Direction::Descending;
  return std::nullopt;
}

// The unique admissible next vertex after the tail of a path, if any.  For
// ascending paths the outgoing edge must carry the tail's greatest induced
// label and arrive as the target's least (mirrored when descending).
inline std::optional<std::pair<Vertex, int>> extend_tail(const GradientContext& ctx,
                                                         Direction dir, Vertex tail) {
  size_t st = static_cast<size_t>(tail);
  Vertex y = dir == Direction::Ascending ? ctx.hi_partner[st] : ctx.lo_partner[st];
  if (y < 0) return std::nullopt;
  int label = dir == Direction::Ascending ? ctx.hi[st] : ctx.lo[st];
  size_t sy = static_cast<size_t>(y);
  int required_at_y = dir == Direction::Ascending ? ctx.lo[sy] : ctx.hi[sy];
  if (label != required_at_y) return std::nullopt;
  return std::make_pair(y, label);
}

// Mirror of extend_tail for prepending before the head.
inline std::optional<std::pair<Vertex, int>> extend_head(const GradientContext& ctx,
                                                         Direction dir, Vertex head) {
  size_t sh = static_cast<size_t>(head);
  Vertex w = dir == Direction::Ascending ? ctx.lo_partner[sh] : ctx.hi_partner[sh];
  if (w < 0) return std::nullopt;
  int label = dir == Direction::Ascending ? ctx.lo[sh] : ctx.hi[sh];
  size_t sw = static_cast<size_t>(w);
  int required_at_w = dir == Direction::Ascending ? ctx.hi[sw] : ctx.lo[sw];
  if (label != required_at_w) return std::nullopt;
  return std::make_pair(w, label);
}

inline bool contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace detail

// Classify the ordered pair (x0, x1) as a trivial gradient path.  When both
// orientations hold (forced singleton induced spectra at both ends) the pair
// is recorded once, as Ascending.
inline std::optional<Direction> is_trivial_gradient_path(const Graph& g, const Labeling& f,
                                                         Vertex x0, Vertex x1) {
  auto e = g.find_edge(x0, x1);
  if (!e)
    fail(errc::not_an_edge,
         "(" + std::to_string(x0) + ", " + std::to_string(x1) + ") is not an edge");
  auto ctx = detail::make_gradient_context(g, f);
  return detail::trivial_direction(ctx, f[*e], x0, x1);
}

// Edges whose two endpoints form a trivial gradient path in both directions
// at once (both induced spectra are the singleton {label}).  Reports surface
// these so the once-as-Ascending tie rule is visible rather than silent.
inline std::vector<std::pair<Vertex, Vertex>> gradient_tie_pairs(const Graph& g,
                                                                 const Labeling& f) {
  auto ctx = detail::make_gradient_context(g, f);
  std::vector<std::pair<Vertex, Vertex>> ties;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    // Both orientations report Ascending exactly when both induced spectra
    // are the singleton {label}, i.e. conditions (a) and (b) coincide.
    if (detail::trivial_direction(ctx, f[e], ed.u, ed.v) == Direction::Ascending &&
        detail::trivial_direction(ctx, f[e], ed.v, ed.u) == Direction::Ascending)
      ties.emplace_back(ed.u, ed.v);
  }
  return ties;
}

// Every gradient path, in lexicographic order of the vertex sequence.  Each
// path arises from a trivial prefix by repeated (unique) tail extension, so
// the enumeration walks each start pair forward.  Output is capped at
// max_count with an explicit truncation flag.
inline GradientPathSet enumerate_gradient_paths(const Graph& g, const Labeling& f,
                                                std::size_t max_count = 100000) {
  auto ctx = detail::make_gradient_context(g, f);
  if (ctx.empty_u) fail(errc::not_in_lambda, "no interval vertices");
  std::vector<GradientPath> all;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      auto dir = detail::trivial_direction(ctx, f[e], a, b);
      if (!dir) continue;
      GradientPath p{{a, b}, *dir, {f[e]}};
      all.push_back(p);
      while (auto next = detail::extend_tail(ctx, *dir, p.vertices.back())) {
        if (detail::contains(p.vertices, next->first)) break;
        p.vertices.push_back(next->first);
        p.edge_labels.push_back(next->second);
        all.push_back(p);
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const GradientPath& x, const GradientPath& y) {
    return x.vertices < y.vertices;
  });
  GradientPathSet out;
  out.truncated = all.size() > max_count;
  if (out.truncated) all.resize(max_count);
  out.paths = std::move(all);
  return out;
}

// Subset-maximal gradient paths, one per vertex set (the ascending
// orientation, smallest sequence first).  Computed by saturating every
// ascending trivial pair at both ends; the enumeration cross-checks in the
// test suite guarantee this matches the subset definition.
inline std::vector<GradientPath> maximal_gradient_paths(const Graph& g, const Labeling& f) {
  auto ctx = detail::make_gradient_context(g, f);
  if (ctx.empty_u) fail(errc::not_in_lambda, "no interval vertices");
  std::map<VertexSet, GradientPath> by_vertex_set;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      auto dir = detail::trivial_direction(ctx, f[e], a, b);
      if (dir != Direction::Ascending) continue;
      GradientPath p{{a, b}, Direction::Ascending, {f[e]}};
      while (auto next = detail::extend_tail(ctx, Direction::Ascending, p.vertices.back())) {
        if (detail::contains(p.vertices, next->first)) break;
        p.vertices.push_back(next->first);
        p.edge_labels.push_back(next->second);
      }
      while (auto prev = detail::extend_head(ctx, Direction::Ascending, p.vertices.front())) {
        if (detail::contains(p.vertices, prev->first)) break;
        p.vertices.insert(p.vertices.begin(), prev->first);
        p.edge_labels.insert(p.edge_labels.begin(), prev->second);
      }
      VertexSet key = p.vertices;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = by_vertex_set.try_emplace(std::move(key), p);
      if (!inserted && p.vertices < it->second.vertices) it->second = p;
    }
  }
  std::vector<GradientPath> out;
  out.reserve(by_vertex_set.size());
  for (auto& [key, path] : by_vertex_set) {
    (void)key;
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end(), [](const GradientPath& x, const GradientPath& y) {
    return x.vertices < y.vertices;
  });
  return out;
}

// The unique maximal gradient path whose vertex set contains p's.  A second
// container would contradict the uniqueness lemma, so it is asserted here.
inline GradientPath containing_maximal_path(const Graph& g, const Labeling& f,
                                            const GradientPath& p) {
  auto ctx = detail::make_gradient_context(g, f);
  if (p.vertices.size() < 2) fail(errc::invalid_path, "path needs at least two vertices");
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 1; j < p.vertices.size(); ++j)
      if (p.vertices[i] == p.vertices[j]) fail(errc::invalid_path, "repeated vertex");
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
    if (!e) fail(errc::invalid_path, "consecutive vertices not adjacent");
    Vertex a = p.direction == Direction::Ascending ? p.vertices[i] : p.vertices[i + 1];
    Vertex b = p.direction == Direction::Ascending ? p.vertices[i + 1] : p.vertices[i];
    // Each edge must chain ascendingly from a to b.
    if (!ctx.in_u[static_cast<size_t>(a)] || !ctx.in_u[static_cast<size_t>(b)] ||
        f[*e] != ctx.hi[static_cast<size_t>(a)] || f[*e] != ctx.lo[static_cast<size_t>(b)])
      fail(errc::invalid_path, "not a gradient path under the stated direction");
  }
  VertexSet want(p.vertices.begin(), p.vertices.end());
  std::sort(want.begin(), want.end());
  std::optional<GradientPath> found;
  for (GradientPath& cand : maximal_gradient_paths(g, f)) {
    VertexSet cs(cand.vertices.begin(), cand.vertices.end());
    std::sort(cs.begin(), cs.end());
    if (std::includes(cs.begin(), cs.end(), want.begin(), want.end())) {
      if (found)
        fail(errc::broken_invariant, "two maximal gradient paths contain the same path");
      found = std::move(cand);
    }
  }
  if (!found) fail(errc::broken_invariant, "no maximal gradient path contains the path");
  return *found;
}

}  // namespace spectra
