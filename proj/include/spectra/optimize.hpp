#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spectra/enumerate.hpp"
#include "spectra/error.hpp"
#include "spectra/galaxy.hpp"
#include "spectra/graph.hpp"
#include "spectra/labeling.hpp"

namespace spectra {

// Maintains the interval-vertex count of a labeling under label swaps.  A
// swap touches at most four vertices (the endpoints of the two edges), so
// re-evaluation is local instead of a full pass.
class UTracker {
 public:
  UTracker(const Graph& g, const Labeling& f) : g_(&g), labels_(f.values()) {
    check_labeling_size(g, f);
    interval_.resize(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      interval_[static_cast<size_t>(v)] = evaluate(v);
      u_size_ += interval_[static_cast<size_t>(v)];
    }
  }

  int u_size() const { return u_size_; }
  bool vertex_interval(Vertex v) const { return interval_[static_cast<size_t>(v)] != 0; }
  const std::vector<int>& labels() const { return labels_; }
  Labeling labeling() const { return Labeling(labels_); }

  // Swap the labels of two edges and return the change in |U|.  Applying the
  // same swap again reverts it exactly.
  int apply_swap(EdgeIndex a, EdgeIndex b) {
    std::swap(labels_[static_cast<size_t>(a)], labels_[static_cast<size_t>(b)]);
    Vertex touched[4] = {g_->edges()[static_cast<size_t>(a)].u,
                         g_->edges()[static_cast<size_t>(a)].v,
                         g_->edges()[static_cast<size_t>(b)].u,
                         g_->edges()[static_cast<size_t>(b)].v};
    int delta = 0;
    for (int i = 0; i < 4; ++i) {
      Vertex v = touched[i];
      bool seen = false;
      for (int j = 0; j < i; ++j) seen = seen || touched[j] == v;
      if (seen) continue;
      char now = evaluate(v);
      delta += now - interval_[static_cast<size_t>(v)];
      interval_[static_cast<size_t>(v)] = now;
    }
    u_size_ += delta;
    return delta;
  }

 private:
  char evaluate(Vertex v) const {
    const auto& inc = g_->neighbors(v);
    if (inc.empty()) return 0;
    int lo = labels_[static_cast<size_t>(inc.front().second)];
    int hi = lo;
    for (const auto& [w, e] : inc) {
      int value = labels_[static_cast<size_t>(e)];
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    // Labels are distinct, so the incident set is an interval exactly when
    // its span matches the degree.
    return hi - lo + 1 == static_cast<int>(inc.size()) ? 1 : 0;
  }

  const Graph* g_;
  std::vector<int> labels_;
  std::vector<char> interval_;
  int u_size_ = 0;
};

struct SearchConfig {
  std::uint64_t budget = 100000;  // proposed swaps per restart
  int restarts = 5;
  std::uint64_t seed = 1;
  double initial_temperature = 1.0;
  double decay = 0.999;  // applied per accepted move
};

struct ImprovementStep {
  std::uint64_t step;
  int u_size;
};

struct RestartTrace {
  int restart = 0;
  std::string start_kind;  // "identity", "galaxy", or "random"
  std::vector<ImprovementStep> improvements;
  int best_u_size = 0;
};

struct SearchResult {
  int best_u_size = 0;
  Labeling best_labeling = Labeling::identity(0);
  bool full_interval = false;
  // A full-interval labeling on a connected non-galaxy would contradict the
  // classification of fully interval graphs; flagged so it cannot pass
  // silently.
  bool full_interval_on_non_galaxy = false;
  std::vector<RestartTrace> traces;
};

namespace detail {

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Simulated annealing over label swaps, maximizing |U|.  Restart 0 starts
// from the identity labeling, restart 1 from the constructive galaxy
// labeling when the graph is one, and the rest from seeded random
// labelings.  Fixed seeds make the whole run reproducible.
inline SearchResult local_search_max_u(const Graph& g, const SearchConfig& config = {}) {
  if (g.edge_count() == 0) fail(errc::empty_edge_set, "search needs at least one edge");
  int m = g.edge_count();
  int n = g.vertex_count();
  bool galaxy = g.is_connected() && is_galaxy(g);

  SearchResult result;
  bool have_best = false;
  int restarts = std::max(1, config.restarts);
  for (int r = 0; r < restarts; ++r) {
    RestartTrace trace;
    trace.restart = r;
    Labeling current = Labeling::identity(m);
    if (r == 0) {
      trace.start_kind = "identity";
    } else if (r == 1 && galaxy) {
      trace.start_kind = "galaxy";
      current = galaxy_labeling(g);
    } else {
      trace.start_kind = "random";
      current = random_labeling(g, config.seed + static_cast<std::uint64_t>(r));
    }

    UTracker tracker(g, current);
    std::vector<int> restart_best = tracker.labels();
    int restart_best_u = tracker.u_size();
    trace.improvements.push_back({0, restart_best_u});

    if (m >= 2 && restart_best_u < n) {
      std::mt19937_64 rng(config.seed +
                          0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1));
      double temperature = config.initial_temperature;
      for (std::uint64_t step = 1; step <= config.budget; ++step) {
        EdgeIndex a = static_cast<EdgeIndex>(bounded_draw(rng, static_cast<std::uint64_t>(m)));
        EdgeIndex b =
            static_cast<EdgeIndex>(bounded_draw(rng, static_cast<std::uint64_t>(m - 1)));
        if (b >= a) ++b;
        int delta = tracker.apply_swap(a, b);
        bool accept = delta >= 0;
        if (!accept && temperature > 0.0)
          accept = detail::unit_double(rng) < std::exp(static_cast<double>(delta) / temperature);
        if (!accept) {
          tracker.apply_swap(a, b);
          continue;
        }
        temperature *= config.decay;
        if (tracker.u_size() > restart_best_u) {
          restart_best_u = tracker.u_size();
          restart_best = tracker.labels();
          trace.improvements.push_back({step, restart_best_u});
          if (restart_best_u == n) break;  // cannot improve further
        }
      }
    }

    trace.best_u_size = restart_best_u;
    result.traces.push_back(std::move(trace));
    bool better = !have_best || restart_best_u > result.best_u_size ||
                  (restart_best_u == result.best_u_size &&
                   restart_best < result.best_labeling.values());
    if (better) {
      result.best_u_size = restart_best_u;
      result.best_labeling = Labeling::bijective_unchecked(restart_best);
      have_best = true;
    }
  }

  result.full_interval = result.best_u_size == n;
  result.full_interval_on_non_galaxy = result.full_interval && !galaxy;
  return result;
}

struct ExactMax {
  int max_u = 0;
  Labeling witness = Labeling::identity(0);
};

// Exact maximum of |U| by guarded exhaustive enumeration (complement-pruned;
// |U| is invariant under label reversal).  The witness is the first labeling
// attaining the maximum in the pruned lexicographic order.
inline ExactMax exact_max_u(const Graph& g,
                            std::optional<int> max_edges_override = std::nullopt) {
  if (g.edge_count() == 0) fail(errc::empty_edge_set, "maximization needs at least one edge");
  ExactMax best;
  bool have = false;
  EnumerationOptions eo;
  eo.prune_complement = true;
  eo.max_edges_override = max_edges_override;
  for_each_labeling(
      g,
      [&](const Labeling& f, std::uint64_t) {
        int u = static_cast<int>(interval_vertices(g, f).size());
        if (!have || u > best.max_u) {
          best.max_u = u;
          best.witness = f;
          have = true;
        }
        return best.max_u < g.vertex_count();  // |U| = n is globally optimal
      },
      eo);
  return best;
}

}  // namespace spectra
