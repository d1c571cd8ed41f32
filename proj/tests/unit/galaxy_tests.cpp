#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "spectra/galaxy.hpp"
#include "spectra/graph_io.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"
#include "support/test_hosts.hpp"

using spectra::BuiltGalaxy;
using spectra::GalaxyDecomposition;
using spectra::GalaxyKind;
using spectra::Graph;
using spectra::build_galaxy;
using spectra::decompose_galaxy;
using spectra::errc;
using spectra::galaxy_labeling;
using spectra::is_galaxy;

namespace {

void require_same_decomposition(const GalaxyDecomposition& a,
                                const GalaxyDecomposition& b) {
  REQUIRE(a.kind == b.kind);
  REQUIRE(a.spine == b.spine);
  REQUIRE(a.pendant_counts == b.pendant_counts);
  REQUIRE(a.pendants == b.pendants);
}

}  // namespace

TEST_CASE("building from pendant counts lays out spine then pendant blocks",
          "[galaxy]") {
  BuiltGalaxy built = build_galaxy({1, 0, 2});
  REQUIRE(built.graph.vertex_count() == 8);
  std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                            {1, 5}, {3, 6}, {3, 7}};
  std::vector<std::pair<int, int>> actual;
  for (const auto& e : built.graph.edges()) actual.push_back({e.u, e.v});
  REQUIRE(actual == expected);
  REQUIRE(spectra::serialize_graph6(built.graph) == "GhD?__");
  REQUIRE(built.decomposition.spine == spectra::VertexSet{0, 1, 2, 3, 4});
  REQUIRE(built.decomposition.pendant_counts == std::vector<int>{1, 0, 2});
  REQUIRE(built.decomposition.pendants ==
          std::vector<std::vector<int>>{{5}, {}, {6, 7}});
}

TEST_CASE("degenerate pendant sequences give bare paths", "[galaxy]") {
  REQUIRE(spectra::serialize_graph6(build_galaxy({0}).graph) == "Bg");
  REQUIRE(spectra::serialize_graph6(build_galaxy({0, 0}).graph) == "Ch");
  REQUIRE(error_code_of([] { build_galaxy({}); }) == errc::empty_sequence);
  REQUIRE(error_code_of([] { build_galaxy({1, -1}); }) == errc::empty_sequence);
}

TEST_CASE("galaxy recognition", "[galaxy]") {
  REQUIRE(is_galaxy(hosts::path(2)));
  REQUIRE(is_galaxy(hosts::path(3)));
  REQUIRE(is_galaxy(hosts::path(7)));
  REQUIRE(is_galaxy(hosts::star(3)));
  REQUIRE(is_galaxy(hosts::star(5)));
  REQUIRE(is_galaxy(build_galaxy({1, 0, 2}).graph));

  REQUIRE_FALSE(is_galaxy(Graph(1, {})));
  REQUIRE_FALSE(is_galaxy(hosts::cycle(3)));
  REQUIRE_FALSE(is_galaxy(hosts::cycle(4)));
  REQUIRE_FALSE(is_galaxy(hosts::complete(4)));
  REQUIRE_FALSE(is_galaxy(hosts::prism()));
  REQUIRE_FALSE(is_galaxy(hosts::petersen()));
  // Spider: three legs of length 2 — a tree whose leaf-deleted graph is a star.
  Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  REQUIRE_FALSE(is_galaxy(spider));

  REQUIRE(error_code_of([] { is_galaxy(Graph(4, {{0, 1}, {2, 3}})); }) ==
          errc::disconnected);
}

TEST_CASE("recognition agrees with the isomorphism oracle on the corpus",
          "[galaxy]") {
  for (const Graph& g : hosts::corpus())
    REQUIRE(is_galaxy(g) == oracle::is_galaxy(g));
}

TEST_CASE("decomposition recovers spine and pendants", "[galaxy]") {
  GalaxyDecomposition k2 = decompose_galaxy(hosts::path(2));
  REQUIRE(k2.kind == GalaxyKind::K2);
  REQUIRE(k2.spine == spectra::VertexSet{0, 1});
  REQUIRE(k2.pendants.empty());

  GalaxyDecomposition p4 = decompose_galaxy(hosts::path(4));
  REQUIRE(p4.kind == GalaxyKind::Spine);
  REQUIRE(p4.spine == spectra::VertexSet{0, 1, 2, 3});
  REQUIRE(p4.pendant_counts == std::vector<int>{0, 0});

  GalaxyDecomposition star4 = decompose_galaxy(hosts::star(4));
  REQUIRE(star4.spine == spectra::VertexSet{1, 0, 2});
  REQUIRE(star4.pendant_counts == std::vector<int>{2});
  REQUIRE(star4.pendants == std::vector<std::vector<int>>{{3, 4}});

  REQUIRE(error_code_of([] { decompose_galaxy(hosts::cycle(4)); }) ==
          errc::not_a_galaxy);
}

TEST_CASE("interval labelings of reference galaxies", "[galaxy]") {
  REQUIRE(galaxy_labeling(hosts::path(2)).to_csv() == "1");
  REQUIRE(galaxy_labeling(hosts::path(4)).to_csv() == "1,2,3");
  REQUIRE(galaxy_labeling(hosts::star(4)).to_csv() == "1,4,2,3");
  REQUIRE(galaxy_labeling(build_galaxy({1, 0, 2}).graph).to_csv() == "1,3,4,7,2,5,6");
  REQUIRE(error_code_of([] { galaxy_labeling(hosts::cycle(4)); }) ==
          errc::not_a_galaxy);
}

TEST_CASE("every galaxy on up to eight vertices gets a full interval labeling",
          "[galaxy]") {
  for (int internals = 1; internals <= 6; ++internals) {
    for (int total_pendants = 0; total_pendants + internals + 2 <= 8; ++total_pendants) {
      for (const auto& counts : oracle::compositions(total_pendants, internals)) {
        BuiltGalaxy built = build_galaxy(counts);
        REQUIRE(is_galaxy(built.graph));
        require_same_decomposition(decompose_galaxy(built.graph), built.decomposition);
        spectra::Labeling f = galaxy_labeling(built.graph);
        REQUIRE(f.is_bijective());
        spectra::VertexSet all;
        for (int v = 0; v < built.graph.vertex_count(); ++v) all.push_back(v);
        REQUIRE(spectra::interval_vertices(built.graph, f) == all);
      }
    }
  }
}
