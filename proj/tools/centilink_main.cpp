#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "centilink/build.hpp"
#include "centilink/evaluation.hpp"
#include "centilink/kernels.hpp"
#include "centilink/version.hpp"

namespace {

using namespace centilink;

std::ofstream open_output_file(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

Measure require_measure(const std::string& name) {
  const auto m = parse_measure(name);
  if (!m) throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
  return *m;
}

struct CommonOptions {
  int top_x = 3;
  double damping = 0.85;
  double tolerance = 1e-8;
  int max_iterations = 100;
  int workers = 1;

  IterativeConfig iterative() const { return IterativeConfig{tolerance, max_iterations, damping}; }
};

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--top-x", opts.top_x, "Candidates retained per mention")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--damping", opts.damping, "PageRank damping factor in (0,1]")
      ->check(CLI::Range(1e-9, 1.0))
      ->capture_default_str();
  cmd.add_option("--tol", opts.tolerance, "Convergence tolerance (L1 change per iteration)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-iter", opts.max_iterations, "Iteration cap for HITS/PageRank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--workers", opts.workers, "Document-level parallelism")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int run_build_dict(const std::string& corpus, const std::string& out_dir, bool strict_targets,
                   bool binary_cache) {
  BuildOptions options;
  options.strict_targets = strict_targets;
  options.binary_cache = binary_cache;
  std::cerr << "building dictionaries from " << corpus << " into " << out_dir << '\n';
  const BuildResult result = build_dictionaries(corpus, out_dir, options);
  std::cout << "pages\t" << result.stats.pages << '\n'
            << "pages_with_links\t" << result.stats.pages_with_links << '\n'
            << "mention_pairs\t" << result.stats.mention_pairs << '\n'
            << "distinct_mentions\t" << result.stats.distinct_mentions << '\n';
  if (strict_targets) std::cout << "dropped_outlinks\t" << result.dropped_outlinks << '\n';
  return 0;
}

int run_link(const std::string& dict_dir, const std::string& input, const std::string& measure,
             const std::string& out_path, const std::string& dump_graph,
             const CommonOptions& common) {
  LinkOptions options;
  options.measure = require_measure(measure);
  options.top_x = common.top_x;
  options.iterative = common.iterative();

  LoadedDictionaries dicts = load_dictionaries(dict_dir);
  print_warnings(dicts.warnings);
  std::cerr << "dictionaries loaded: " << dicts.mentions.mention_count() << " mentions, "
            << dicts.entities.edge_count() << " entity links\n";

  std::ifstream in(input);
  if (!in) throw DataError("cannot open " + input);
  DocumentReadResult read = read_documents_jsonl(in, /*require_gold=*/false);
  print_warnings(read.warnings);
  std::cerr << "linking " << read.documents.size() << " documents with measure "
            << to_string(options.measure) << '\n';

  const auto decisions =
      link_corpus(read.documents, dicts.mentions, dicts.entities, options, common.workers);

  if (!dump_graph.empty()) {
    auto dot = open_output_file(dump_graph);
    for (const Document& doc : read.documents) {
      std::vector<std::vector<Candidate>> candidates;
      candidates.reserve(doc.mentions.size());
      for (const Mention& m : doc.mentions)
        candidates.push_back(top_x(popularity_scores(dicts.mentions, m.surface), options.top_x));
      write_dot(build_disamb_graph(candidates, dicts.entities), dot, doc.id);
    }
  }

  if (out_path.empty() || out_path == "-") {
    write_decisions_jsonl(std::cout, read.documents, decisions);
  } else {
    auto out = open_output_file(out_path);
    write_decisions_jsonl(out, read.documents, decisions);
  }
  return 0;
}

int run_evaluate(const std::string& dict_dir, const std::vector<std::string>& dataset_paths,
                 const std::string& measure, const std::string& mode,
                 const std::string& report_path, bool dis_keep_graph,
                 const CommonOptions& common) {
  std::vector<Measure> measures;
  if (measure == "all") {
    measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  } else {
    measures.push_back(require_measure(measure));
  }
  std::vector<EvalMode> modes;
  if (mode == "both") {
    modes = {EvalMode::overall, EvalMode::disambiguation};
  } else if (mode == "overall") {
    modes = {EvalMode::overall};
  } else if (mode == "disambiguation") {
    modes = {EvalMode::disambiguation};
  } else {
    throw CLI::ValidationError("--mode", "expected overall, disambiguation, or both");
  }

  LoadedDictionaries dicts = load_dictionaries(dict_dir);
  print_warnings(dicts.warnings);

  std::vector<GoldDataset> datasets;
  datasets.reserve(dataset_paths.size());
  for (const std::string& path : dataset_paths) {
    GoldDataset dataset = load_dataset(path);
    print_warnings(dataset.warnings);
    std::cerr << "dataset " << dataset.name << ": " << dataset.documents.size() << " documents, "
              << dataset.total_mentions() << " mentions";
    if (dataset.rejected_mentions > 0)
      std::cerr << " (" << dataset.rejected_mentions << " rejected)";
    std::cerr << '\n';
    datasets.push_back(std::move(dataset));
  }

  EvalOptions options;
  options.top_x = common.top_x;
  options.iterative = common.iterative();
  options.workers = common.workers;
  options.dis_keep_graph = dis_keep_graph;

  const EvalReport report =
      run_evaluation(datasets, dicts.mentions, dicts.entities, measures, modes, options);

  const bool markdown = report_path.size() > 3 && report_path.ends_with(".md");
  if (report_path.empty() || report_path == "-") {
    write_report_tsv(report, std::cout);
  } else {
    auto out = open_output_file(report_path);
    if (markdown) {
      write_report_markdown(report, out);
    } else {
      write_report_tsv(report, out);
    }
  }
  return 0;
}

int run_bench(const std::string& measure, int nodes, int graphs, double edge_prob,
              unsigned seed, const std::string& kernels_name, const CommonOptions& common) {
  if (!kernels_name.empty() && kernels_name != "auto" &&
      !kernels::select_kernels(kernels_name)) {
    throw CLI::ValidationError("--kernels",
                               "kernel set '" + kernels_name + "' unavailable on this machine");
  }

  std::vector<Measure> measures;
  if (measure == "all") {
    measures = {Measure::degree, Measure::hits, Measure::pagerank, Measure::betweenness,
                Measure::closeness};
  } else {
    const Measure m = require_measure(measure);
    if (m == Measure::popularity)
      throw CLI::ValidationError("--measure", "popularity has no graph to benchmark");
    measures.push_back(m);
  }

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Digraph> batch;
  batch.reserve(graphs);
  std::size_t total_edges = 0;
  for (int g = 0; g < graphs; ++g) {
    Digraph graph(nodes);
    for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(nodes); ++u) {
      for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(nodes); ++v) {
        if (u != v && coin(rng) < edge_prob) graph.add_edge(u, v);
      }
    }
    total_edges += graph.edge_count();
    batch.push_back(std::move(graph));
  }

  std::cout << "kernels\t" << kernels::active_kernels().name << '\n';
  std::cout << "measure\tnodes\tgraphs\tavg_edges\ttotal_ms\tper_graph_us\n";
  for (Measure m : measures) {
    const auto start = std::chrono::steady_clock::now();
    double checksum = 0.0;
    for (const Digraph& graph : batch) {
      const CentralityScores scores = score(graph, m, common.iterative());
      checksum += scores.scores.empty() ? 0.0 : scores.scores.front();
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    char avg_edges[32], total_ms[32], per_graph[32];
    std::snprintf(avg_edges, sizeof avg_edges, "%.1f",
                  static_cast<double>(total_edges) / static_cast<double>(graphs));
    std::snprintf(total_ms, sizeof total_ms, "%.2f", ms);
    std::snprintf(per_graph, sizeof per_graph, "%.1f", ms * 1000.0 / graphs);
    std::cout << to_string(m) << '\t' << nodes << '\t' << graphs << '\t' << avg_edges << '\t'
              << total_ms << '\t' << per_graph << '\n';
    (void)checksum;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centilink: entity linking with popularity pruning and graph centrality"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("centilink ") + kVersion + " (dict format v" +
                                        std::to_string(kDictFormatVersion) + ", cache format v" +
                                        std::to_string(kCacheFormatVersion) + ")");
  app.set_config("--config", "", "Flat key=value config file; flags take precedence");

  // build-dict
  auto* build = app.add_subcommand("build-dict", "Build the two dictionaries from a corpus");
  std::string corpus, out_dir;
  bool strict_targets = false, binary_cache = false;
  build->add_option("--corpus", corpus, "Corpus file (#PAGE records)")->required();
  build->add_option("--out-dir", out_dir, "Output directory for the TSV dictionaries")
      ->required();
  build->add_flag("--strict-targets", strict_targets,
                  "Drop outlinks whose target is not a corpus title");
  build->add_flag("--binary-cache", binary_cache, "Also write binary caches next to the TSVs");

  // link
  auto* link = app.add_subcommand("link", "Link documents to entities");
  std::string link_dict_dir, link_input, link_measure = "degree", link_out = "-", dump_graph;
  CommonOptions link_common;
  link->add_option("--dict-dir", link_dict_dir, "Directory holding the dictionaries")->required();
  link->add_option("--input", link_input, "Documents JSONL")->required();
  link->add_option("--measure", link_measure,
                   "popularity, degree, hits, pagerank, betweenness, closeness")
      ->capture_default_str();
  link->add_option("--out", link_out, "Decisions JSONL ('-' = stdout)")->capture_default_str();
  link->add_option("--dump-graph", dump_graph, "Write each document's graph as DOT");
  add_common_options(*link, link_common);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score measures against gold datasets");
  std::string eval_dict_dir, eval_measure = "all", eval_mode = "both", report = "-";
  std::vector<std::string> dataset_paths;
  bool dis_keep_graph = false;
  CommonOptions eval_common;
  evaluate->add_option("--dict-dir", eval_dict_dir, "Directory holding the dictionaries")
      ->required();
  evaluate->add_option("--dataset", dataset_paths, "Gold dataset JSONL (repeatable)")
      ->required()
      ->take_all();
  evaluate->add_option("--measure", eval_measure, "A measure name or 'all'")
      ->capture_default_str();
  evaluate->add_option("--mode", eval_mode, "overall, disambiguation, or both")
      ->capture_default_str();
  evaluate->add_option("--report", report, "Report path (.md for markdown; '-' = TSV to stdout)")
      ->capture_default_str();
  evaluate->add_flag("--dis-keep-graph", dis_keep_graph,
                     "Disambiguation mode scores the full graph instead of rebuilding");
  add_common_options(*evaluate, eval_common);

  // bench
  auto* bench = app.add_subcommand("bench", "Time centrality measures on random graphs");
  std::string bench_measure = "all", bench_kernels = "auto";
  int bench_nodes = 200, bench_graphs = 50;
  double bench_edge_prob = 0.05;
  unsigned bench_seed = 42;
  CommonOptions bench_common;
  bench->add_option("--measure", bench_measure, "A graph measure or 'all'")
      ->capture_default_str();
  bench->add_option("--nodes", bench_nodes, "Nodes per random graph")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--graphs", bench_graphs, "Number of random graphs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--edge-prob", bench_edge_prob, "Directed edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Graph generator seed")->capture_default_str();
  bench->add_option("--kernels", bench_kernels, "Force a kernel set: auto, scalar, avx2, neon")
      ->capture_default_str();
  add_common_options(*bench, bench_common);

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
    if (build->parsed())
      return run_build_dict(corpus, out_dir, strict_targets, binary_cache);
    if (link->parsed())
      return run_link(link_dict_dir, link_input, link_measure, link_out, dump_graph, link_common);
    if (evaluate->parsed())
      return run_evaluate(eval_dict_dir, dataset_paths, eval_measure, eval_mode, report,
                          dis_keep_graph, eval_common);
    if (bench->parsed())
      return run_bench(bench_measure, bench_nodes, bench_graphs, bench_edge_prob, bench_seed,
                       bench_kernels, bench_common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
