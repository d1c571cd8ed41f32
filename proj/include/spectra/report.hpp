#pragma once

#include <variant>

#include "json.hpp"
#include "spectra/classify.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/gradient.hpp"
#include "spectra/graph.hpp"
#include "spectra/graph_io.hpp"
#include "spectra/labeling.hpp"
#include "spectra/optimize.hpp"

namespace spectra {

// ordered_json preserves insertion order, which keeps serialized reports
// byte-stable across runs and compilers.
using json = nlohmann::ordered_json;

namespace detail {

template <typename... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

inline json component_to_json(const ClassifiedComponent& c) {
  const char* cls = "";
  json detail = json::object();
  std::visit(detail::overloaded{
                 [&](const IsolatedVertexClass& k) {
                   cls = "k1";
                   detail["host_leaf"] = k.is_host_leaf;
                 },
                 [&](const GalaxyCaseA&) { cls = "galaxy_a"; },
                 [&](const GalaxyCaseB& b) {
                   cls = "galaxy_b";
                   detail["bad_leaf"] = b.bad_leaf;
                 },
                 [&](const GalaxyCaseC& cc) {
                   cls = "galaxy_c";
                   detail["bad_pair"] = {cc.bad_pair.first, cc.bad_pair.second};
                   detail["distance"] = cc.pair_distance;
                 },
                 [&](const ComponentViolation& v) {
                   cls = "violation";
                   detail["reason"] = violation_reason_name(v.reason);
                   detail["witnesses"] = v.witnesses;
                   if (v.observed >= 0) detail["observed"] = v.observed;
                   if (v.expected >= 0) detail["expected"] = v.expected;
                 },
             },
             c.component_class);
  return json{{"host_vertices", c.host_vertices}, {"class", cls}, {"detail", detail}};
}

inline json verdict_to_json(const TheoremVerdict& v) {
  json comps = json::array();
  for (const auto& c : v.components) comps.push_back(component_to_json(c));
  return json{{"lambda_member", v.lambda_member},
              {"is_forest", v.is_forest},
              {"overall", theorem_outcome_name(v.overall)},
              {"components", comps}};
}

inline json gradient_path_to_json(const GradientPath& p) {
  return json{{"vertices", p.vertices},
              {"labels", p.edge_labels},
              {"direction", direction_name(p.direction)}};
}

inline json stats_to_json(const LabelingStats& s) {
  json hist = json::array();
  for (auto [size, count] : s.u_size_histogram) hist.push_back({size, count});
  return json{{"total", s.total_labelings},
              {"u_size_histogram", hist},
              {"empty_u_count", s.empty_u_count},
              {"full_interval_count", s.full_interval_count},
              {"max_u", s.max_u},
              {"violations", s.violations.size() + s.violations_overflow},
              {"violations_stored", s.violations.size()}};
}

inline json search_to_json(const SearchResult& r) {
  json traces = json::array();
  for (const auto& t : r.traces) {
    json imps = json::array();
    for (const auto& s : t.improvements) imps.push_back({s.step, s.u_size});
    traces.push_back(json{{"restart", t.restart},
                          {"start", t.start_kind},
                          {"best_u_size", t.best_u_size},
                          {"improvements", imps}});
  }
  return json{{"best_labeling", r.best_labeling.values()},
              {"best_labeling_csv", r.best_labeling.to_csv()},
              {"best_u_size", r.best_u_size},
              {"full_interval", r.full_interval},
              {"full_interval_on_non_galaxy", r.full_interval_on_non_galaxy},
              {"traces", traces}};
}

// Self-contained record of one (graph, labeling) analysis: inputs echoed,
// spectra, interval vertices, the structure verdict, lemma summaries, and —
// on request — the gradient-path listing.
inline json analysis_report(const Graph& g, const Labeling& f, bool with_gradient = false) {
  check_labeling_size(g, f);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json spectra_arr = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    spectra_arr.push_back(spectrum(g, f, v).values);
  VertexSet u = interval_vertices(g, f);
  TheoremVerdict verdict = check_theorem(g, f);
  auto overlap = check_lemma_adjacent_overlap(g, f);
  auto bound = check_lemma_neighbor_bound(g, f);

  json report{{"schema", 1},
              {"graph6", serialize_graph6(g)},
              {"vertex_count", g.vertex_count()},
              {"edge_count", g.edge_count()},
              {"edges", edges},
              {"labeling", f.values()},
              {"spectra", spectra_arr},
              {"interval_vertices", u},
              {"verdict", verdict_to_json(verdict)},
              {"lemma_checks",
               json{{"adjacent_overlap", json{{"holds", overlap.passed()},
                                              {"pairs_checked", overlap.checked}}},
                    {"neighbor_bound", json{{"holds", bound.passed()},
                                            {"vertices_checked", bound.checked}}}}}};

  if (with_gradient) {
    json paths = json::array();
    json maximal = json::array();
    json ties = json::array();
    bool truncated = false;
    if (!u.empty()) {
      GradientPathSet set = enumerate_gradient_paths(g, f);
      truncated = set.truncated;
      for (const auto& p : set.paths) paths.push_back(gradient_path_to_json(p));
      for (const auto& p : maximal_gradient_paths(g, f))
        maximal.push_back(gradient_path_to_json(p));
      for (auto [a, b] : gradient_tie_pairs(g, f)) ties.push_back({a, b});
    }
    report["gradient_paths"] = paths;
    report["gradient_truncated"] = truncated;
    report["maximal_gradient_paths"] = maximal;
    report["gradient_ties"] = ties;
  }
  return report;
}

}  // namespace spectra
