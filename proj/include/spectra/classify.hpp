#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/galaxy.hpp"
#include "spectra/graph.hpp"
#include "spectra/labeling.hpp"

namespace spectra {

// Structural verdict for one component H of the interval-induced subgraph.
// All vertex references are host indices.  The "bad leaves" of H are its
// leaves that are not leaves of the host (host degree >= 2); the component
// is admissible when there are none (CaseA), exactly one sitting at a
// peripheral vertex of H (CaseB), or exactly two at diametral distance
// (CaseC).

enum class ViolationReason {
  NotGalaxy,
  TooManyBadLeaves,
  BadLeafNotPeripheral,
  PairNotDiametral,
};

inline const char* violation_reason_name(ViolationReason r) {
  switch (r) {
    case ViolationReason::NotGalaxy: return "not_galaxy";
    case ViolationReason::TooManyBadLeaves: return "too_many_bad_leaves";
    case ViolationReason::BadLeafNotPeripheral: return "bad_leaf_not_peripheral";
    case ViolationReason::PairNotDiametral: return "pair_not_diametral";
  }
  return "unknown";
}

struct IsolatedVertexClass {
  Vertex vertex;
  bool is_host_leaf;
  friend bool operator==(const IsolatedVertexClass&, const IsolatedVertexClass&) = default;
};

struct GalaxyCaseA {
  friend bool operator==(const GalaxyCaseA&, const GalaxyCaseA&) = default;
};

struct GalaxyCaseB {
  Vertex bad_leaf;
  friend bool operator==(const GalaxyCaseB&, const GalaxyCaseB&) = default;
};

struct GalaxyCaseC {
  std::pair<Vertex, Vertex> bad_pair;  // ascending
  int pair_distance;
  friend bool operator==(const GalaxyCaseC&, const GalaxyCaseC&) = default;
};

struct ComponentViolation {
  ViolationReason reason;
  std::vector<Vertex> witnesses;
  int observed = -1;  // PairNotDiametral: the pair's distance
  int expected = -1;  // PairNotDiametral: the component diameter
  friend bool operator==(const ComponentViolation&, const ComponentViolation&) = default;
};

using ComponentClass = std::variant<IsolatedVertexClass, GalaxyCaseA, GalaxyCaseB,
                                    GalaxyCaseC, ComponentViolation>;

// h: one connected component (own index space); to_host: h index -> host
// index.  The host graph supplies the degrees that decide leaf badness.
inline ComponentClass classify_component(const Graph& host, const Graph& h,
                                         const std::vector<Vertex>& to_host) {
  if (h.vertex_count() == 1) {
    Vertex hv = to_host[0];
    return IsolatedVertexClass{hv, host.degree(hv) == 1};
  }
  if (!is_galaxy(h)) return ComponentViolation{ViolationReason::NotGalaxy, {}};

  std::vector<Vertex> bad;  // h indices
  for (Vertex leaf : h.leaves())
    if (host.degree(to_host[static_cast<size_t>(leaf)]) >= 2) bad.push_back(leaf);

  if (bad.empty()) return GalaxyCaseA{};
  if (bad.size() == 1) {
    auto info = diameter_and_peripherals(h);
    Vertex b = bad[0];
    Vertex hb = to_host[static_cast<size_t>(b)];
    if (std::binary_search(info.peripherals.begin(), info.peripherals.end(), b))
      return GalaxyCaseB{hb};
    return ComponentViolation{ViolationReason::BadLeafNotPeripheral, {hb}};
  }
  if (bad.size() == 2) {
    int d = distance(h, bad[0], bad[1]);
    int diam = diameter_and_peripherals(h).diameter;
    Vertex a = to_host[static_cast<size_t>(bad[0])];
    Vertex b = to_host[static_cast<size_t>(bad[1])];
    if (a > b) std::swap(a, b);
    if (d == diam) return GalaxyCaseC{{a, b}, d};
    return ComponentViolation{ViolationReason::PairNotDiametral, {a, b}, d, diam};
  }
  std::vector<Vertex> witnesses;
  for (Vertex b : bad) witnesses.push_back(to_host[static_cast<size_t>(b)]);
  return ComponentViolation{ViolationReason::TooManyBadLeaves, std::move(witnesses)};
}

enum class TheoremOutcome { Holds, VacuouslyHolds, Violation };

inline const char* theorem_outcome_name(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::Holds: return "holds";
    case TheoremOutcome::VacuouslyHolds: return "vacuous";
    case TheoremOutcome::Violation: return "violation";
  }
  return "unknown";
}

struct ClassifiedComponent {
  VertexSet host_vertices;
  ComponentClass component_class;
  friend bool operator==(const ClassifiedComponent&, const ClassifiedComponent&) = default;
};

struct TheoremVerdict {
  bool lambda_member = false;  // some vertex has an interval spectrum
  bool is_forest = true;       // the interval-induced subgraph is acyclic
  std::vector<ClassifiedComponent> components;  // ordered by least host vertex
  TheoremOutcome overall = TheoremOutcome::VacuouslyHolds;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

// Check the structure theorem for (g, f): the interval-induced subgraph must
// be a forest whose components are isolated vertices or galaxies with an
// admissible bad-leaf pattern.  Empty interval set => vacuous.
inline TheoremVerdict check_theorem(const Graph& g, const Labeling& f) {
  TheoremVerdict verdict;
  auto induced = interval_induced_subgraph(g, f);
  if (induced.graph.vertex_count() == 0) return verdict;  // vacuous defaults

  verdict.lambda_member = true;
  verdict.is_forest = induced.graph.is_forest();
  bool violated = !verdict.is_forest;
  for (const VertexSet& comp : induced.graph.components()) {
    auto sub = induced_subgraph(induced.graph, comp);
    std::vector<Vertex> to_host;
    to_host.reserve(sub.vertex_to_parent.size());
    for (Vertex v : sub.vertex_to_parent)
      to_host.push_back(induced.vertex_to_parent[static_cast<size_t>(v)]);
    ComponentClass cls = classify_component(g, sub.graph, to_host);
    if (std::holds_alternative<ComponentViolation>(cls)) violated = true;
    verdict.components.push_back(ClassifiedComponent{to_host, std::move(cls)});
  }
  verdict.overall = violated ? TheoremOutcome::Violation : TheoremOutcome::Holds;
  return verdict;
}

// --- Lemma-level checkers (host spectra throughout) ---------------------

struct AdjacentOverlapReport {
  struct Failure {
    Vertex x, y;
    std::vector<int> shared_labels;
  };
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

// Adjacent interval vertices must share exactly one spectrum value (the
// label of the connecting edge is always common, so anything more or less
// is a failure).
inline AdjacentOverlapReport check_lemma_adjacent_overlap(const Graph& g,
                                                          const Labeling& f) {
  check_labeling_size(g, f);
  AdjacentOverlapReport report;
  VertexSet u = interval_vertices(g, f);
  std::vector<char> in_u(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : u) in_u[static_cast<size_t>(v)] = 1;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    if (!in_u[static_cast<size_t>(ed.u)] || !in_u[static_cast<size_t>(ed.v)]) continue;
    ++report.checked;
    Spectrum a = spectrum(g, f, ed.u);
    Spectrum b = spectrum(g, f, ed.v);
    std::vector<int> shared;
    std::set_intersection(a.values.begin(), a.values.end(), b.values.begin(),
                          b.values.end(), std::back_inserter(shared));
    if (shared.size() != 1)
      report.failures.push_back({ed.u, ed.v, std::move(shared)});
  }
  return report;
}

struct NeighborBoundReport {
  struct Failure {
    Vertex x;
    std::vector<Vertex> core_interval_neighbors;
  };
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

// An interval vertex has at most two neighbors that are interval vertices of
// host degree >= 2.
inline NeighborBoundReport check_lemma_neighbor_bound(const Graph& g,
                                                      const Labeling& f) {
  check_labeling_size(g, f);
  NeighborBoundReport report;
  VertexSet u = interval_vertices(g, f);
  std::vector<char> in_u(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : u) in_u[static_cast<size_t>(v)] = 1;
  for (Vertex x : u) {
    ++report.checked;
    std::vector<Vertex> offenders;
    for (auto [w, e] : g.neighbors(x)) {
      (void)e;
      if (in_u[static_cast<size_t>(w)] && g.degree(w) >= 2) offenders.push_back(w);
    }
    if (offenders.size() > 2) {
      std::sort(offenders.begin(), offenders.end());
      report.failures.push_back({x, std::move(offenders)});
    }
  }
  return report;
}

enum class ChainDirection { Ascending, Descending };

inline const char* chain_direction_name(ChainDirection d) {
  return d == ChainDirection::Ascending ? "ascending" : "descending";
}

// Monotonicity along a chain of adjacent interval vertices of host degree
// >= 2: each connecting edge's label must be the greatest value of one end's
// host spectrum and the least of the other's, uniformly oriented along the
// chain.  Interval spectra of degree >= 2 have at least two values, so the
// two orientations are mutually exclusive; NotEligible flags precondition
// failures, ChainBroken a genuine counterexample.
inline ChainDirection check_chain_monotonicity(const Graph& g, const Labeling& f,
                                               const std::vector<Vertex>& chain) {
  check_labeling_size(g, f);
  if (chain.size() < 2) fail(errc::not_eligible, "chain needs at least two vertices");
  VertexSet u = interval_vertices(g, f);
  for (Vertex x : chain) {
    if (!std::binary_search(u.begin(), u.end(), x))
      fail(errc::not_eligible, "vertex " + std::to_string(x) + " has no interval spectrum");
    if (g.degree(x) < 2)
      fail(errc::not_eligible, "vertex " + std::to_string(x) + " has host degree < 2");
  }
  bool ascending = true, descending = true;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    auto e = g.find_edge(chain[i], chain[i + 1]);
    if (!e)
      fail(errc::not_eligible, "chain vertices " + std::to_string(chain[i]) + ", " +
                                   std::to_string(chain[i + 1]) + " are not adjacent");
    int label = f[*e];
    Spectrum a = spectrum(g, f, chain[i]);
    Spectrum b = spectrum(g, f, chain[i + 1]);
    ascending = ascending && label == a.greatest() && label == b.least();
    descending = descending && label == a.least() && label == b.greatest();
  }
  if (ascending) return ChainDirection::Ascending;
  if (descending) return ChainDirection::Descending;
  fail(errc::chain_broken, "chain satisfies neither orientation");
}

}  // namespace spectra
