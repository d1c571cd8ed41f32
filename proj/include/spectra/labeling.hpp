#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/graph.hpp"

namespace spectra {

// Labels live in [1, kMaxLabel] and are pairwise distinct.  The enumeration
// and search machinery only ever produces bijective labelings (labels exactly
// {1..|E|}); general injective labelings are accepted as input.
inline constexpr int kMaxLabel = 1'000'000'000;

class Labeling {
 public:
  explicit Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    std::unordered_set<int> seen;
    for (int v : labels_) {
      if (v < 1 || v > kMaxLabel)
        fail(errc::label_out_of_range, "label " + std::to_string(v));
      if (!seen.insert(v).second)
        fail(errc::non_injective, "label " + std::to_string(v) + " repeats");
    }
  }

  // 1, 2, ..., m in edge-index order.
  static Labeling identity(int edge_count) {
    std::vector<int> labels(static_cast<size_t>(edge_count));
    for (int i = 0; i < edge_count; ++i) labels[static_cast<size_t>(i)] = i + 1;
    return Labeling(std::move(labels), unchecked_tag{});
  }

  // For generators that guarantee a valid bijection (hot paths).
  static Labeling bijective_unchecked(std::vector<int> labels) {
    return Labeling(std::move(labels), unchecked_tag{});
  }

  // CSV in edge-index order, e.g. "1,3,2".
  static Labeling parse_csv(std::string_view csv) {
    std::vector<int> labels;
    size_t pos = 0;
    while (pos <= csv.size()) {
      size_t comma = csv.find(',', pos);
      std::string_view field = csv.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
      size_t a = field.find_first_not_of(" \t\r\n");
      size_t b = field.find_last_not_of(" \t\r\n");
      if (a == std::string_view::npos)
        fail(errc::malformed_labeling, "empty CSV field");
      field = field.substr(a, b - a + 1);
      int value = 0;
      for (char c : field) {
        if (c < '0' || c > '9')
          fail(errc::malformed_labeling, "non-numeric CSV field");
        if (value > kMaxLabel / 10)
          fail(errc::label_out_of_range, "label too large");
        value = value * 10 + (c - '0');
      }
      labels.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Labeling(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](EdgeIndex e) const { return labels_[static_cast<size_t>(e)]; }
  const std::vector<int>& values() const { return labels_; }

  bool is_bijective() const {
    int m = size();
    for (int v : labels_)
      if (v > m) return false;
    return true;  // distinct + within [1, m] => exactly {1..m}
  }

  std::string to_csv() const {
    std::string out;
    for (size_t i = 0; i < labels_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(labels_[i]);
    }
    return out;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  struct unchecked_tag {};
  Labeling(std::vector<int> labels, unchecked_tag) : labels_(std::move(labels)) {}

  std::vector<int> labels_;
};

inline void check_labeling_size(const Graph& g, const Labeling& f) {
  if (f.size() != g.edge_count())
    fail(errc::labeling_size_mismatch,
         std::to_string(f.size()) + " labels for " + std::to_string(g.edge_count()) +
             " edges");
}

// Multiset of labels on edges incident to a vertex, sorted ascending.
// Injectivity makes it a set of size deg(x); empty only for isolated
// vertices, which occur in derived (induced) graphs.
struct Spectrum {
  std::vector<int> values;

  bool empty() const { return values.empty(); }
  int least() const {
    if (values.empty()) fail(errc::empty_spectrum, "least of empty spectrum");
    return values.front();
  }
  int greatest() const {
    if (values.empty()) fail(errc::empty_spectrum, "greatest of empty spectrum");
    return values.back();
  }
};

inline Spectrum spectrum(const Graph& g, const Labeling& f, Vertex x) {
  check_labeling_size(g, f);
  Spectrum s;
  for (auto [w, e] : g.neighbors(x)) {
    (void)w;
    s.values.push_back(f[e]);
  }
  std::sort(s.values.begin(), s.values.end());
  return s;
}

// A finite set of positive integers is an interval iff its size equals
// greatest - least + 1, i.e. it is a run of consecutive values.
inline bool is_interval(const Spectrum& s) {
  if (s.empty()) fail(errc::empty_spectrum, "interval test on empty spectrum");
  return static_cast<int>(s.values.size()) == s.greatest() - s.least() + 1;
}

// Vertices whose spectrum is an interval.  Degree-1 vertices always qualify
// (singleton spectra are intervals); isolated vertices never do (empty
// spectra are not intervals).
inline VertexSet interval_vertices(const Graph& g, const Labeling& f) {
  check_labeling_size(g, f);
  VertexSet out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& nbrs = g.neighbors(x);
    if (nbrs.empty()) continue;
    int lo = kMaxLabel + 1, hi = 0;
    for (auto [w, e] : nbrs) {
      (void)w;
      lo = std::min(lo, f[e]);
      hi = std::max(hi, f[e]);
    }
    if (hi - lo + 1 == static_cast<int>(nbrs.size())) out.push_back(x);
  }
  return out;
}

// Subgraph induced by the interval vertices.  An empty result (no interval
// vertices) is a legal value; reports flag it as NotInLambda.
inline InducedSubgraph interval_induced_subgraph(const Graph& g, const Labeling& f) {
  return induced_subgraph(g, interval_vertices(g, f));
}

inline Labeling complement_labeling(const Graph& g, const Labeling& f) {
  check_labeling_size(g, f);
  if (!f.is_bijective())
    fail(errc::not_bijective, "complement needs labels exactly {1..|E|}");
  int m = g.edge_count();
  std::vector<int> out(static_cast<size_t>(m));
  for (EdgeIndex e = 0; e < m; ++e) out[static_cast<size_t>(e)] = m + 1 - f[e];
  return Labeling::bijective_unchecked(std::move(out));
}

// Unbiased bounded draw from a 64-bit engine via rejection; written out by
// hand so the byte stream is identical on every platform.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t r;
  do {
    r = rng();
  } while (r < threshold);
  return r % n;
}

// Uniformly random bijective labeling: Fisher-Yates over (1..m) driven by
// mt19937_64 seeded with `seed`.  Deterministic for a given (graph, seed).
inline Labeling random_labeling(const Graph& g, std::uint64_t seed) {
  int m = g.edge_count();
  std::vector<int> labels(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<size_t>(i)] = i + 1;
  std::mt19937_64 rng(seed);
  for (int i = m - 1; i > 0; --i) {
    auto j = static_cast<size_t>(bounded_draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(labels[static_cast<size_t>(i)], labels[j]);
  }
  return Labeling::bijective_unchecked(std::move(labels));
}

}  // namespace spectra
