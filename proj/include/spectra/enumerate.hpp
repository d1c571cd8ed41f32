#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "spectra/classify.hpp"
#include "spectra/error.hpp"
#include "spectra/galaxy.hpp"
#include "spectra/graph.hpp"
#include "spectra/labeling.hpp"

namespace spectra {

// Exhaustive enumeration is factorial in |E|; this guard keeps accidental
// multi-hour runs out.  Callers that accept the runtime pass an explicit
// override (the CLI wires the SPECTRA_MAX_EDGES environment variable here).
inline constexpr int kMaxEnumerationEdges = 10;

struct EnumerationOptions {
  bool prune_complement = false;
  std::optional<int> max_edges_override;
  // Restrict to labelings whose first edge carries this label (shard unit).
  std::optional<int> first_label;
};

namespace detail {

template <typename Consumer>
bool invoke_consumer(Consumer& consume, const Labeling& f, std::uint64_t weight) {
  if constexpr (std::is_void_v<decltype(consume(f, weight))>) {
    consume(f, weight);
    return true;
  } else {
    return consume(f, weight);
  }
}

}  // namespace detail

// Visit bijective labelings in lexicographic order of the label array.  With
// prune_complement, exactly one of each pair {f, m+1-f} is visited — the
// lexicographically smaller one — and the consumer receives weight 2 (the
// pair is self-paired only when |E| = 1, where the weight stays 1).  A
// consumer may return bool; false stops the walk (return value reports
// whether the walk ran to completion).
template <typename Consumer>
bool for_each_labeling(const Graph& g, Consumer&& consume,
                       const EnumerationOptions& options = {}) {
  int m = g.edge_count();
  int limit = options.max_edges_override.value_or(kMaxEnumerationEdges);
  if (m > limit)
    fail(errc::too_many_edges, std::to_string(m) + " edges exceeds enumeration guard " +
                                   std::to_string(limit));
  std::vector<int> labels(static_cast<size_t>(m));
  std::vector<char> used(static_cast<size_t>(m) + 1, 0);
  // Complement comparison state along the current prefix: 0 while equal so
  // far, 1 once strictly smaller.  Prefixes that turn strictly greater are
  // skipped wholesale.
  auto walk = [&](auto&& self, int pos, int state) -> bool {
    if (pos == m) {
      std::uint64_t weight = options.prune_complement && state == 1 ? 2 : 1;
      Labeling f = Labeling::bijective_unchecked(labels);
      return detail::invoke_consumer(consume, f, weight);
    }
    for (int v = 1; v <= m; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (pos == 0 && options.first_label && v != *options.first_label) continue;
      int next_state = state;
      if (options.prune_complement && state == 0) {
        int c = m + 1 - v;
        if (v > c) continue;
        next_state = v < c ? 1 : 0;
      }
      labels[static_cast<size_t>(pos)] = v;
      used[static_cast<size_t>(v)] = 1;
      bool keep_going = self(self, pos + 1, next_state);
      used[static_cast<size_t>(v)] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  return walk(walk, 0, 0);
}

// Aggregate view of a family of labelings.  Violation payloads are capped;
// the overflow counter keeps the total honest.
struct LabelingStats {
  static constexpr std::size_t kViolationCap = 100;

  std::uint64_t total_labelings = 0;
  std::map<int, std::uint64_t> u_size_histogram;
  std::uint64_t empty_u_count = 0;
  std::uint64_t full_interval_count = 0;
  int max_u = 0;
  std::vector<std::pair<Labeling, TheoremVerdict>> violations;
  std::uint64_t violations_overflow = 0;

  void record(const Graph& g, const Labeling& f, const TheoremVerdict& verdict,
              std::uint64_t weight) {
    int u_size = 0;
    for (const auto& comp : verdict.components)
      u_size += static_cast<int>(comp.host_vertices.size());
    total_labelings += weight;
    u_size_histogram[u_size] += weight;
    if (u_size == 0) empty_u_count += weight;
    if (u_size == g.vertex_count()) full_interval_count += weight;
    if (u_size > max_u) max_u = u_size;
    if (verdict.overall == TheoremOutcome::Violation) {
      add_violation(f, verdict);
      // The complement labeling has the same interval vertices, hence the
      // same verdict; surface it too so pruned runs stay reproducible.
      if (weight == 2) add_violation(complement_labeling(g, f), verdict);
    }
  }

  void merge(LabelingStats&& other) {
    total_labelings += other.total_labelings;
    for (auto [k, v] : other.u_size_histogram) u_size_histogram[k] += v;
    empty_u_count += other.empty_u_count;
    full_interval_count += other.full_interval_count;
    max_u = std::max(max_u, other.max_u);
    violations_overflow += other.violations_overflow;
    for (auto& entry : other.violations) {
      if (violations.size() < kViolationCap)
        violations.push_back(std::move(entry));
      else
        ++violations_overflow;
    }
  }

 private:
  void add_violation(Labeling f, const TheoremVerdict& verdict) {
    if (violations.size() < kViolationCap)
      violations.emplace_back(std::move(f), verdict);
    else
      ++violations_overflow;
  }
};

struct VerifyOptions {
  bool prune_complement = false;
  int workers = 1;  // threads pulling first-label shards
  std::optional<int> max_edges_override;
};

// Run check_theorem over every bijective labeling.  Work is sharded by the
// first edge's label; shard results merge in label order, so the outcome is
// identical for any worker count.
inline LabelingStats exhaustive_verify(const Graph& g, const VerifyOptions& options = {}) {
  int m = g.edge_count();
  int limit = options.max_edges_override.value_or(kMaxEnumerationEdges);
  if (m > limit)
    fail(errc::too_many_edges, std::to_string(m) + " edges exceeds enumeration guard " +
                                   std::to_string(limit));
  std::vector<LabelingStats> shard_stats(static_cast<size_t>(m));
  auto run_shard = [&](int first_label) {
    EnumerationOptions eo;
    eo.prune_complement = options.prune_complement;
    eo.max_edges_override = options.max_edges_override;
    eo.first_label = first_label;
    LabelingStats& stats = shard_stats[static_cast<size_t>(first_label - 1)];
    for_each_labeling(
        g,
        [&](const Labeling& f, std::uint64_t weight) {
          stats.record(g, f, check_theorem(g, f), weight);
        },
        eo);
  };

  int workers = std::max(1, std::min(options.workers, m));
  if (workers <= 1) {
    for (int first = 1; first <= m; ++first) run_shard(first);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int first = next.fetch_add(1); first <= m; first = next.fetch_add(1))
          run_shard(first);
      });
    for (auto& t : pool) t.join();
  }

  LabelingStats merged;
  for (auto& s : shard_stats) merged.merge(std::move(s));
  return merged;
}

// Same aggregation over `samples` random labelings; sample k is
// random_labeling(g, seed + k), so samples = 1 reproduces the plain seeded
// draw.
inline LabelingStats sampled_verify(const Graph& g, std::uint64_t samples,
                                    std::uint64_t seed) {
  LabelingStats stats;
  for (std::uint64_t k = 0; k < samples; ++k) {
    Labeling f = random_labeling(g, seed + k);
    stats.record(g, f, check_theorem(g, f), 1);
  }
  return stats;
}

// Decide whether some bijective labeling makes every vertex spectrum an
// interval.  Galaxies get the constructive answer; everything else is
// settled by exhaustion (guarded).  A positive answer on a non-galaxy would
// falsify the classification theorem — callers surface it loudly.
inline std::pair<bool, std::optional<Labeling>> has_full_interval_labeling(
    const Graph& g, std::optional<int> max_edges_override = std::nullopt) {
  if (g.is_connected() && is_galaxy(g)) return {true, galaxy_labeling(g)};
  std::optional<Labeling> witness;
  EnumerationOptions eo;
  eo.prune_complement = true;  // |U| is complement-invariant
  eo.max_edges_override = max_edges_override;
  for_each_labeling(
      g,
      [&](const Labeling& f, std::uint64_t) {
        if (static_cast<int>(interval_vertices(g, f).size()) == g.vertex_count()) {
          witness = f;
          return false;
        }
        return true;
      },
      eo);
  if (witness) return {true, witness};
  return {false, std::nullopt};
}

}  // namespace spectra
