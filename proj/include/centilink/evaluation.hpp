#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "centilink/linker.hpp"

namespace centilink {

struct GoldDataset {
  std::string name;
  std::vector<Document> documents;   // every mention carries a gold entity
  std::size_t rejected_mentions = 0;
  std::vector<std::string> warnings;

  std::size_t total_mentions() const;
};

// Loads a dataset JSONL file; mentions without a non-empty gold entity are
// rejected with a warning. The dataset name defaults to the file stem.
GoldDataset load_dataset(const std::filesystem::path& path, std::string name = {});

enum class EvalMode { overall, disambiguation };

std::string_view to_string(EvalMode mode);

struct EvalCounts {
  std::uint64_t total = 0;               // mentions in mode (denominator)
  std::uint64_t with_candidate = 0;      // non-empty top-x candidate list
  std::uint64_t gold_in_candidates = 0;  // gold inside the top-x list
  std::uint64_t linked = 0;              // decisions with a chosen entity
  std::uint64_t correct = 0;
};

// accuracy = correct / total-in-mode, precision = correct / linked,
// recall = correct / total-in-mode, f1 = 2PR/(P+R) (0 when P+R = 0).
// Published entity-linking results rarely pin their P/R denominators, so
// every report header states these definitions explicitly.
struct EvalRow {
  Measure measure = Measure::popularity;
  EvalMode mode = EvalMode::overall;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  EvalCounts counts;
};

struct EvalOptions {
  int top_x = 3;
  IterativeConfig iterative;
  int workers = 1;
  // Disambiguation mode rebuilds each document's graph from the retained
  // mentions. With dis_keep_graph the full graph is scored and only the
  // retained mentions are counted.
  bool dis_keep_graph = false;
};

// Overall mode scores every gold mention. Disambiguation mode first drops the
// mentions whose gold entity is outside their top-x candidates, then relinks
// the remainder. Throws DataError on a dataset with no mentions.
EvalRow evaluate(const GoldDataset& dataset, const MentionEntityDict& dict,
                 const EntityLinkIndex& index, Measure measure, EvalMode mode,
                 const EvalOptions& options = {});

struct DatasetReport {
  std::string dataset;
  std::vector<EvalRow> rows;
};

struct EvalReport {
  std::vector<DatasetReport> datasets;
  // Present with more than one dataset: unweighted means of the per-dataset
  // metrics per (measure, mode); counts are summed totals.
  std::vector<EvalRow> averages;
};

// All six methods (popularity + five centrality measures) in both modes, per
// dataset, plus cross-dataset averages.
EvalReport compare_measures(std::span<const GoldDataset> datasets,
                            const MentionEntityDict& dict, const EntityLinkIndex& index,
                            const EvalOptions& options = {});

// Restricted method/mode selections for the CLI.
EvalReport run_evaluation(std::span<const GoldDataset> datasets,
                          const MentionEntityDict& dict, const EntityLinkIndex& index,
                          std::span<const Measure> measures,
                          std::span<const EvalMode> modes, const EvalOptions& options);

void write_report_tsv(const EvalReport& report, std::ostream& out);
void write_report_markdown(const EvalReport& report, std::ostream& out);

}  // namespace centilink
