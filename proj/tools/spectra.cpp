// Command-line front end: analysis of a single labeling, exhaustive/sampled
// verification, |U| statistics, annealing search, and galaxy tooling.
//
// Output contract: stdout carries exactly one JSON document per successful
// run (pure edge-list text for `galaxy build`); diagnostics go to stderr.
// Exit codes: 0 ok, 1 usage/input error, 2 theorem violation found,
// 3 enumeration guard tripped.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectra/report.hpp"

namespace {

using spectra::Graph;
using spectra::json;
using spectra::Labeling;

struct GraphInput {
  std::string graph6;
  std::string edges_path;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--graph6", in.graph6, "graph as a graph6 string");
  cmd->add_option("--edges", in.edges_path, "graph as an edge-list file (one 'u v' pair per line)")
      ->check(CLI::ExistingFile);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) spectra::fail(spectra::errc::malformed_edge_list, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Hosts are loaded connected with at least one edge; derived subgraphs may
// be anything, but the top-level subject of every command is a host.
Graph load_graph(const GraphInput& in) {
  bool have_g6 = !in.graph6.empty();
  bool have_edges = !in.edges_path.empty();
  if (have_g6 == have_edges)
    throw CLI::ValidationError("graph input", "provide exactly one of --graph6 / --edges");
  Graph g = have_g6 ? spectra::parse_graph6(in.graph6)
                    : spectra::parse_edge_list_text(read_file(in.edges_path));
  if (g.edge_count() == 0)
    spectra::fail(spectra::errc::empty_edge_set, "host graph has no edges");
  if (!g.is_connected())
    spectra::fail(spectra::errc::disconnected, "host graph must be connected");
  return g;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  return start == std::string::npos ? std::string() : s.substr(start);
}

Labeling load_labeling(const Graph& g, const std::string& csv, const std::string& file) {
  bool have_csv = !csv.empty();
  bool have_file = !file.empty();
  if (have_csv == have_file)
    throw CLI::ValidationError("labeling input", "provide exactly one of --labels / --labels-file");
  Labeling f = Labeling::parse_csv(have_csv ? csv : trimmed(read_file(file)));
  spectra::check_labeling_size(g, f);
  return f;
}

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) spectra::fail(spectra::errc::malformed_edge_list, "cannot write " + out_path);
  out << text;
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) spectra::fail(spectra::errc::malformed_edge_list, "cannot write " + out_path);
  out << text;
}

std::optional<int> guard_override_from_env() {
  const char* raw = std::getenv("SPECTRA_MAX_EDGES");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    std::cerr << "warning: ignoring invalid SPECTRA_MAX_EDGES='" << raw << "'\n";
    return std::nullopt;
  }
  std::cerr << "warning: enumeration guard overridden to " << value
            << " edges (SPECTRA_MAX_EDGES); factorial runtimes ahead\n";
  return static_cast<int>(value);
}

json graph_echo(const Graph& g) {
  return json{{"schema", 1},
              {"graph6", spectra::serialize_graph6(g)},
              {"vertex_count", g.vertex_count()},
              {"edge_count", g.edge_count()}};
}

std::vector<int> parse_count_csv(const std::string& csv) {
  std::vector<int> counts;
  std::string field;
  std::istringstream in(csv);
  while (std::getline(in, field, ',')) {
    field = trimmed(field);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
      spectra::fail(spectra::errc::empty_sequence, "bad pendant count '" + field + "'");
    counts.push_back(std::stoi(field));
  }
  if (counts.empty()) spectra::fail(spectra::errc::empty_sequence, "no pendant counts given");
  return counts;
}

// --- subcommand bodies ---------------------------------------------------

int run_analyze(const GraphInput& gin, const std::string& labels_csv,
                const std::string& labels_file, bool gradient, const std::string& out) {
  Graph g = load_graph(gin);
  Labeling f = load_labeling(g, labels_csv, labels_file);
  spectra::TheoremVerdict verdict = spectra::check_theorem(g, f);
  emit(spectra::analysis_report(g, f, gradient), out);
  return verdict.overall == spectra::TheoremOutcome::Violation ? 2 : 0;
}

struct VerifyFlags {
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  bool prune = false;
  int shards = 1;
};

spectra::LabelingStats run_aggregation(const Graph& g, const VerifyFlags& flags, json& doc) {
  if (flags.exhaustive == (flags.samples > 0))
    throw CLI::ValidationError("mode", "provide exactly one of --exhaustive / --samples N");
  if (flags.exhaustive) {
    spectra::VerifyOptions opts;
    opts.prune_complement = flags.prune;
    opts.workers = flags.shards;
    opts.max_edges_override = guard_override_from_env();
    doc["mode"] = "exhaustive";
    doc["prune"] = flags.prune;
    doc["shards"] = flags.shards;
    return spectra::exhaustive_verify(g, opts);
  }
  doc["mode"] = "sampled";
  doc["samples"] = flags.samples;
  doc["seed"] = flags.seed;
  return spectra::sampled_verify(g, flags.samples, flags.seed);
}

int run_verify(const GraphInput& gin, const VerifyFlags& flags, const std::string& dir,
               const std::string& out) {
  Graph g = load_graph(gin);
  json doc = graph_echo(g);
  spectra::LabelingStats stats = run_aggregation(g, flags, doc);
  doc.update(spectra::stats_to_json(stats));
  json files = json::array();
  for (size_t i = 0; i < stats.violations.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "violation-%03zu.txt", i);
    std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream repro(path);
    if (!repro) spectra::fail(spectra::errc::malformed_edge_list, "cannot write " + path.string());
    repro << spectra::serialize_graph6(g) << "\n" << stats.violations[i].first.to_csv() << "\n";
    files.push_back(path.string());
  }
  doc["violation_files"] = files;
  emit(doc, out);
  if (!stats.violations.empty() || stats.violations_overflow > 0) {
    std::cerr << "THEOREM VIOLATION: " << (stats.violations.size() + stats.violations_overflow)
              << " labeling(s) broke the structure theorem; see reproduction files\n";
    return 2;
  }
  return 0;
}

int run_stats(const GraphInput& gin, const VerifyFlags& flags, const std::string& out) {
  Graph g = load_graph(gin);
  json doc = graph_echo(g);
  spectra::LabelingStats stats = run_aggregation(g, flags, doc);
  doc.update(spectra::stats_to_json(stats));
  emit(doc, out);
  return stats.violations.empty() && stats.violations_overflow == 0 ? 0 : 2;
}

int run_search(const GraphInput& gin, const spectra::SearchConfig& cfg, const std::string& out) {
  Graph g = load_graph(gin);
  spectra::SearchResult result = spectra::local_search_max_u(g, cfg);
  json doc = graph_echo(g);
  doc["budget"] = cfg.budget;
  doc["restarts"] = cfg.restarts;
  doc["seed"] = cfg.seed;
  doc.update(spectra::search_to_json(result));
  emit(doc, out);
  if (result.full_interval_on_non_galaxy) {
    std::cerr << "THEOREM VIOLATION: full-interval labeling found on a non-galaxy host "
              << "(labels " << result.best_labeling.to_csv() << ")\n";
    return 2;
  }
  return 0;
}

int run_galaxy_build(const std::string& counts_csv, const std::string& out) {
  spectra::BuiltGalaxy built = spectra::build_galaxy(parse_count_csv(counts_csv));
  std::string text = "# graph6: " + spectra::serialize_graph6(built.graph) + "\n" +
                     spectra::serialize_edge_list_text(built.graph);
  emit_text(text, out);
  return 0;
}

int run_galaxy_check(const GraphInput& gin, const std::string& out) {
  Graph g = load_graph(gin);
  json doc = graph_echo(g);
  bool galaxy = spectra::is_galaxy(g);
  doc["is_galaxy"] = galaxy;
  if (galaxy) {
    spectra::GalaxyDecomposition d = spectra::decompose_galaxy(g);
    doc["kind"] = d.kind == spectra::GalaxyKind::K2 ? "k2" : "spine";
    doc["spine"] = d.spine;
    doc["pendant_counts"] = d.pendant_counts;
  }
  emit(doc, out);
  return 0;
}

int run_galaxy_label(const GraphInput& gin, const std::string& out) {
  Graph g = load_graph(gin);
  Labeling f = spectra::galaxy_labeling(g);
  emit(json(f.to_csv()), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"injective edge labelings: interval spectra toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "spectra 0.1.0");

  GraphInput gin;
  std::string labels_csv, labels_file, out_path, violations_dir = ".";
  bool gradient = false;
  VerifyFlags vflags;
  spectra::SearchConfig search_cfg;
  std::string counts_csv;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one labeling of one host");
  add_graph_options(analyze, gin);
  analyze->add_option("--labels", labels_csv, "labeling as CSV in edge-index order");
  analyze->add_option("--labels-file", labels_file, "file containing the labeling CSV")
      ->check(CLI::ExistingFile);
  analyze->add_flag("--gradient", gradient, "include the gradient-path listing");
  analyze->add_option("--out", out_path, "write the JSON report here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "check the structure theorem over labelings");
  add_graph_options(verify, gin);
  verify->add_flag("--exhaustive", vflags.exhaustive, "all |E|! labelings (guarded)");
  verify->add_option("--samples", vflags.samples, "number of random labelings");
  verify->add_option("--seed", vflags.seed, "base seed for sampling");
  verify->add_flag("--prune", vflags.prune, "visit one labeling per complement pair");
  verify->add_option("--shards", vflags.shards, "worker threads over first-label shards")
      ->check(CLI::PositiveNumber);
  verify->add_option("--violations-dir", violations_dir, "directory for reproduction files");
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

  CLI::App* stats = app.add_subcommand("stats", "aggregate |U| statistics over labelings");
  add_graph_options(stats, gin);
  stats->add_flag("--exhaustive", vflags.exhaustive, "all |E|! labelings (guarded)");
  stats->add_option("--samples", vflags.samples, "number of random labelings");
  stats->add_option("--seed", vflags.seed, "base seed for sampling");
  stats->add_flag("--prune", vflags.prune, "visit one labeling per complement pair");
  stats->add_option("--shards", vflags.shards, "worker threads over first-label shards")
      ->check(CLI::PositiveNumber);
  stats->add_option("--out", out_path, "write the JSON report here instead of stdout");

  CLI::App* search = app.add_subcommand("search", "anneal for a labeling maximizing |U|");
  add_graph_options(search, gin);
  search->add_option("--budget", search_cfg.budget, "proposed swaps per restart");
  search->add_option("--restarts", search_cfg.restarts, "independent restarts")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", search_cfg.seed, "base seed");
  search->add_option("--out", out_path, "write the JSON report here instead of stdout");

  CLI::App* galaxy = app.add_subcommand("galaxy", "build / recognize / label galaxies");
  galaxy->require_subcommand(1);
  CLI::App* gbuild = galaxy->add_subcommand("build", "construct from internal pendant counts");
  gbuild->add_option("counts", counts_csv, "CSV of pendant counts, e.g. 1,0,2")->required();
  gbuild->add_option("--out", out_path, "write the edge list here instead of stdout");
  CLI::App* gcheck = galaxy->add_subcommand("check", "decide galaxy-ness, emit decomposition");
  add_graph_options(gcheck, gin);
  gcheck->add_option("--out", out_path, "write the JSON report here instead of stdout");
  CLI::App* glabel = galaxy->add_subcommand("label", "emit the full-interval labeling");
  add_graph_options(glabel, gin);
  glabel->add_option("--out", out_path, "write the JSON string here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) return run_analyze(gin, labels_csv, labels_file, gradient, out_path);
    if (*verify) return run_verify(gin, vflags, violations_dir, out_path);
    if (*stats) return run_stats(gin, vflags, out_path);
    if (*search) return run_search(gin, search_cfg, out_path);
    if (*gbuild) return run_galaxy_build(counts_csv, out_path);
    if (*gcheck) return run_galaxy_check(gin, out_path);
    if (*glabel) return run_galaxy_label(gin, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const spectra::error& e) {
    std::cerr << "error: [" << e.code_name() << "] " << e.message() << "\n";
    return e.code() == spectra::errc::too_many_edges ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
