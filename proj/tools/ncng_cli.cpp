#include "ncng/construct.hpp"
#include "ncng/corpus.hpp"
#include "ncng/group_spec.hpp"
#include "ncng/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

struct GlobalFlags {
  std::size_t max_order = ncng::kDefaultMaxOrder;
  std::size_t lattice_cap = ncng::kDefaultLatticeCap;
  std::size_t threads = 0;
  bool full_bfs = false;
};

ncng::AnalysisOptions analysis_options(const GlobalFlags& flags) {
  ncng::AnalysisOptions opts;
  opts.max_order = flags.max_order;
  opts.lattice_cap = flags.lattice_cap;
  opts.full_bfs = flags.full_bfs;
  if (const char* dir = std::getenv("NCNG_CACHE_DIR"); dir && *dir) opts.cache_dir = dir;
  return opts;
}

std::vector<ncng::GraphKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<ncng::GraphKind> kinds;
  for (const auto& n : names) {
    const auto k = ncng::parse_graph_kind(n);
    if (!k) throw ncng::Error("unknown graph kind '" + n + "'");
    if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) kinds.push_back(*k);
  }
  return kinds;
}

int run_analyze(const GlobalFlags& flags, const std::string& spec, const std::vector<std::string>& kinds,
                bool no_suite) {
  auto opts = analysis_options(flags);
  if (!kinds.empty()) opts.kinds = parse_kinds(kinds);
  opts.run_suite = !no_suite;
  const auto record = ncng::analyze(spec, opts);
  std::cout << ncng::to_json(record, true).dump(2) << '\n';
  bool ok = record.sumtwo_agree();
  for (const auto& c : record.suite) ok = ok && c.ok();
  return ok ? 0 : 1;
}

int run_verify(const GlobalFlags& flags, const std::string& corpus, const std::string& report_path) {
  ncng::VerifyOptions opts;
  opts.analysis = analysis_options(flags);
  opts.threads = flags.threads ? flags.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto entries = ncng::parse_corpus_file(corpus);
  const auto result = ncng::verify(entries, opts);
  ncng::write_summary(std::cout, result);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw ncng::Error("cannot write report " + report_path);
    ncng::write_report(out, result);
  }
  return result.exit_code;
}

int run_graph(const GlobalFlags& flags, const std::string& spec, const std::string& kind_name,
              const std::string& dot_path, const std::string& adjacency_path) {
  const auto kind = parse_kinds({kind_name}).front();
  const auto opts = analysis_options(flags);
  ncng::GroupContext ctx(ncng::construct(ncng::parse_spec(spec), {.max_order = opts.max_order}), opts.lattice_cap,
                         opts.full_bfs);
  const auto& graph = ctx.graph(kind);
  const auto& summary = ctx.summary(kind);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw ncng::Error("cannot write " + dot_path);
    ncng::write_dot(out, ctx.group(), graph, summary);
  }
  if (!adjacency_path.empty()) {
    std::ofstream out(adjacency_path, std::ios::binary);
    if (!out) throw ncng::Error("cannot write " + adjacency_path);
    ncng::write_adjacency(out, graph);
  }
  std::cout << ncng::to_json(ncng::graph_record(ctx, kind)).dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group engine for the non-commuting, non-generating graph"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--max-order", flags.max_order, "Refuse groups above this order")->capture_default_str();
  app.add_option("--lattice-cap", flags.lattice_cap, "Largest order for full subgroup lattices")
      ->capture_default_str();
  app.add_option("--threads", flags.threads, "Worker threads for verify (0: hardware concurrency)");
  app.add_flag("--full-bfs", flags.full_bfs, "BFS from every vertex instead of class representatives");

  std::string spec;
  std::vector<std::string> kinds;
  bool no_suite = false;
  auto* analyze = app.add_subcommand("analyze", "Analyse one group and print its record as JSON");
  analyze->fallthrough();
  analyze->add_option("spec", spec, "Group spec, e.g. S(4) or C(2)xAGL(1,5)")->required();
  analyze->add_option("--kind", kinds, "Graph kinds to summarise (repeatable)");
  analyze->add_flag("--no-suite", no_suite, "Skip the property suites");

  std::string corpus, report;
  auto* verify = app.add_subcommand("verify", "Check a corpus of groups against expectations and the suites");
  verify->fallthrough();
  verify->add_option("--corpus", corpus, "Corpus file")->required();
  verify->add_option("--report", report, "Write the line-delimited JSON report here");

  std::string kind = "ncng", dot, adjacency;
  auto* graph = app.add_subcommand("graph", "Export a graph of a group");
  graph->fallthrough();
  graph->add_option("spec", spec, "Group spec")->required();
  graph->add_option("--kind", kind, "ncng, commuting, non_commuting, generating or non_generating")
      ->capture_default_str();
  graph->add_option("--dot", dot, "Graphviz output path");
  graph->add_option("--adjacency", adjacency, "Binary adjacency output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(flags, spec, kinds, no_suite);
    if (*verify) return run_verify(flags, corpus, report);
    if (*graph) return run_graph(flags, spec, kind, dot, adjacency);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
