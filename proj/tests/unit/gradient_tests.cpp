#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "spectra/gradient.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"
#include "support/test_hosts.hpp"

using spectra::Direction;
using spectra::GradientPath;
using spectra::Graph;
using spectra::Labeling;
using spectra::errc;

namespace {

// (vertex sequence, ascending?) projection for oracle comparison.
std::vector<oracle::OraclePath> projected(const std::vector<GradientPath>& paths) {
  std::vector<oracle::OraclePath> out;
  for (const GradientPath& p : paths)
    out.push_back({p.vertices, p.direction == Direction::Ascending});
  return out;
}

}  // namespace

TEST_CASE("monotone path carries gradient paths in both directions", "[gradient]") {
  Graph p4 = hosts::path(4);
  Labeling f({1, 2, 3});
  auto set = spectra::enumerate_gradient_paths(p4, f);
  REQUIRE_FALSE(set.truncated);
  REQUIRE(set.paths.size() == 12);
  int ascending = 0;
  for (const GradientPath& p : set.paths) {
    if (p.direction == Direction::Ascending) ++ascending;
    // labels are recoverable from consecutive vertex pairs
    REQUIRE(p.edge_labels.size() + 1 == p.vertices.size());
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      auto e = p4.find_edge(p.vertices[i], p.vertices[i + 1]);
      REQUIRE(e.has_value());
      REQUIRE(f[*e] == p.edge_labels[i]);
    }
  }
  REQUIRE(ascending == 6);
  REQUIRE(set.paths.front().vertices == spectra::VertexSet{0, 1});
  REQUIRE(set.paths[2].vertices == spectra::VertexSet{0, 1, 2, 3});

  auto maximal = spectra::maximal_gradient_paths(p4, f);
  REQUIRE(maximal.size() == 1);
  REQUIRE(maximal[0].vertices == spectra::VertexSet{0, 1, 2, 3});
  REQUIRE(maximal[0].edge_labels == std::vector<int>{1, 2, 3});
  REQUIRE(maximal[0].direction == Direction::Ascending);

  // every ascending path appears reversed as a descending one
  for (const GradientPath& p : set.paths) {
    if (p.direction != Direction::Ascending) continue;
    std::vector<int> rev(p.vertices.rbegin(), p.vertices.rend());
    bool found = false;
    for (const GradientPath& q : set.paths)
      found = found || (q.vertices == rev && q.direction == Direction::Descending);
    REQUIRE(found);
  }
}

TEST_CASE("trivial pair classification", "[gradient]") {
  Graph p4 = hosts::path(4);
  Labeling f({1, 2, 3});
  REQUIRE(spectra::is_trivial_gradient_path(p4, f, 0, 1) == Direction::Ascending);
  REQUIRE(spectra::is_trivial_gradient_path(p4, f, 1, 0) == Direction::Descending);
  REQUIRE(spectra::is_trivial_gradient_path(p4, f, 1, 2) == Direction::Ascending);
  REQUIRE(error_code_of([&] { spectra::is_trivial_gradient_path(p4, f, 0, 2); }) ==
          errc::not_an_edge);
}

TEST_CASE("isolated interval edges tie and are recorded once ascending",
          "[gradient]") {
  Graph k3 = Graph::from_edge_list({{0, 1}, {1, 2}, {0, 2}});
  Labeling f({1, 2, 3});
  // U = {1, 2}; the induced graph is a single edge with singleton spectra.
  REQUIRE(spectra::is_trivial_gradient_path(k3, f, 1, 2) == Direction::Ascending);
  REQUIRE(spectra::is_trivial_gradient_path(k3, f, 2, 1) == Direction::Ascending);
  auto set = spectra::enumerate_gradient_paths(k3, f);
  REQUIRE(projected(set.paths) ==
          std::vector<oracle::OraclePath>{{{1, 2}, true}, {{2, 1}, true}});
  auto maximal = spectra::maximal_gradient_paths(k3, f);
  REQUIRE(maximal.size() == 1);
  REQUIRE(maximal[0].vertices == spectra::VertexSet{1, 2});
  REQUIRE(spectra::gradient_tie_pairs(k3, f) ==
          std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("broken path keeps only its intact edge", "[gradient]") {
  Graph p4 = hosts::path(4);
  Labeling f({2, 1, 3});
  auto set = spectra::enumerate_gradient_paths(p4, f);
  REQUIRE(projected(set.paths) ==
          std::vector<oracle::OraclePath>{{{0, 1}, true}, {{1, 0}, true}});
  auto maximal = spectra::maximal_gradient_paths(p4, f);
  REQUIRE(maximal.size() == 1);
  REQUIRE(maximal[0].vertices == spectra::VertexSet{0, 1});
  REQUIRE(spectra::gradient_tie_pairs(p4, f) ==
          std::vector<std::pair<int, int>>{{0, 1}});
  // monotone identity labeling has no ties: no singleton adjacent spectra pair
  REQUIRE(spectra::gradient_tie_pairs(p4, Labeling({1, 2, 3})).empty());
}

TEST_CASE("gradient enumeration requires interval vertices", "[gradient]") {
  Graph c5 = hosts::cycle(5);
  Labeling f({1, 3, 5, 2, 4});
  REQUIRE(error_code_of([&] { spectra::enumerate_gradient_paths(c5, f); }) ==
          errc::not_in_lambda);
  REQUIRE(error_code_of([&] { spectra::maximal_gradient_paths(c5, f); }) ==
          errc::not_in_lambda);
}

TEST_CASE("every gradient path extends to a unique maximal one", "[gradient]") {
  Graph p5 = hosts::path(5);
  Labeling f({1, 2, 3, 4});
  GradientPath seed{{1, 2}, Direction::Ascending, {2}};
  GradientPath container = spectra::containing_maximal_path(p5, f, seed);
  REQUIRE(container.vertices == spectra::VertexSet{0, 1, 2, 3, 4});
  REQUIRE(container.edge_labels == std::vector<int>{1, 2, 3, 4});
  // a maximal path is its own container
  REQUIRE(spectra::containing_maximal_path(p5, f, container).vertices ==
          container.vertices);
}

TEST_CASE("container lookup validates its input path", "[gradient]") {
  Graph p5 = hosts::path(5);
  Labeling f({1, 2, 3, 4});
  REQUIRE(error_code_of([&] {
            spectra::containing_maximal_path(p5, f, {{1}, Direction::Ascending, {}});
          }) == errc::invalid_path);
  REQUIRE(error_code_of([&] {
            spectra::containing_maximal_path(p5, f, {{1, 3}, Direction::Ascending, {}});
          }) == errc::invalid_path);
  REQUIRE(error_code_of([&] {
            spectra::containing_maximal_path(p5, f,
                                             {{1, 2, 1}, Direction::Ascending, {}});
          }) == errc::invalid_path);
  REQUIRE(error_code_of([&] {
            spectra::containing_maximal_path(p5, f, {{1, 2}, Direction::Descending, {2}});
          }) == errc::invalid_path);
}

TEST_CASE("enumeration is capped with an explicit flag", "[gradient]") {
  Graph p4 = hosts::path(4);
  auto set = spectra::enumerate_gradient_paths(p4, Labeling({1, 2, 3}), 3);
  REQUIRE(set.truncated);
  REQUIRE(set.paths.size() == 3);
  REQUIRE(set.paths[0].vertices == spectra::VertexSet{0, 1});
}

TEST_CASE("enumeration and maximal sets match the path-search oracle",
          "[gradient]") {
  for (const Graph& g : hosts::corpus()) {
    if (g.edge_count() > 5) continue;
    std::vector<int> labels(static_cast<size_t>(g.edge_count()));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      Labeling f(labels);
      spectra::VertexSet u = spectra::interval_vertices(g, f);
      if (u.empty()) continue;

      auto set = spectra::enumerate_gradient_paths(g, f);
      REQUIRE_FALSE(set.truncated);
      REQUIRE(projected(set.paths) == oracle::gradient_paths(g, labels));

      auto maximal = spectra::maximal_gradient_paths(g, f);
      REQUIRE(projected(maximal) == oracle::maximal_paths(g, labels));

      for (const GradientPath& p : set.paths) {
        // vertices stay inside the interval set; labels strictly monotone
        for (spectra::Vertex v : p.vertices)
          REQUIRE(std::binary_search(u.begin(), u.end(), v));
        for (size_t i = 0; i + 1 < p.edge_labels.size(); ++i) {
          if (p.direction == Direction::Ascending)
            REQUIRE(p.edge_labels[i] < p.edge_labels[i + 1]);
          else
            REQUIRE(p.edge_labels[i] > p.edge_labels[i + 1]);
        }
      }
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
}
