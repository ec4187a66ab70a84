#include "centilink/evaluation.hpp"

#include <cstdio>
#include <fstream>

#include "centilink/candidates.hpp"
#include "centilink/errors.hpp"
#include "centilink/parallel.hpp"

namespace centilink {

std::size_t GoldDataset::total_mentions() const {
  std::size_t n = 0;
  for (const Document& doc : documents) n += doc.mentions.size();
  return n;
}

std::string_view to_string(EvalMode mode) {
  return mode == EvalMode::overall ? "overall" : "disambiguation";
}

GoldDataset load_dataset(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path.string());
  GoldDataset dataset;
  dataset.name = name.empty() ? path.stem().string() : std::move(name);
  DocumentReadResult read = read_documents_jsonl(in, /*require_gold=*/true);
  dataset.documents = std::move(read.documents);
  dataset.rejected_mentions = read.rejected_mentions;
  dataset.warnings = std::move(read.warnings);
  return dataset;
}

namespace {

struct ModeCounts {
  EvalCounts counts;
};

bool gold_in_list(const std::vector<Candidate>& candidates, const Mention& mention) {
  if (!mention.gold) return false;
  for (const Candidate& c : candidates) {
    if (c.entity == *mention.gold) return true;
  }
  return false;
}

EvalRow finalize_row(Measure measure, EvalMode mode, EvalCounts counts) {
  EvalRow row;
  row.measure = measure;
  row.mode = mode;
  row.counts = counts;
  const double denom = static_cast<double>(counts.total);
  row.accuracy = counts.total == 0 ? 0.0 : static_cast<double>(counts.correct) / denom;
  row.recall = row.accuracy;
  row.precision =
      counts.linked == 0 ? 0.0
                         : static_cast<double>(counts.correct) / static_cast<double>(counts.linked);
  row.f1 = (row.precision + row.recall) > 0
               ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
               : 0.0;
  return row;
}

}  // namespace

EvalRow evaluate(const GoldDataset& dataset, const MentionEntityDict& dict,
                 const EntityLinkIndex& index, Measure measure, EvalMode mode,
                 const EvalOptions& options) {
  if (dataset.total_mentions() == 0)
    throw DataError("evaluate: dataset '" + dataset.name + "' has no mentions");

  const LinkOptions link_options{measure, options.top_x, options.iterative};
  std::vector<EvalCounts> per_doc(dataset.documents.size());

  parallel_for(dataset.documents.size(), options.workers, [&](std::size_t di) {
    const Document& doc = dataset.documents[di];
    EvalCounts c;

    std::vector<std::vector<Candidate>> candidates;
    candidates.reserve(doc.mentions.size());
    for (const Mention& m : doc.mentions)
      candidates.push_back(top_x(popularity_scores(dict, m.surface), options.top_x));

    auto tally = [&](const LinkDecision& decision, const Mention& mention) {
      if (!decision.chosen) return;
      ++c.linked;
      if (mention.gold && *decision.chosen == *mention.gold) ++c.correct;
    };

    if (mode == EvalMode::overall) {
      c.total = doc.mentions.size();
      for (std::size_t mi = 0; mi < doc.mentions.size(); ++mi) {
        if (!candidates[mi].empty()) ++c.with_candidate;
        if (gold_in_list(candidates[mi], doc.mentions[mi])) ++c.gold_in_candidates;
      }
      const auto decisions = link_document(doc, dict, index, link_options);
      for (const LinkDecision& d : decisions) tally(d, doc.mentions[d.mention_index]);
    } else {
      // Keep only the winnable mentions: gold inside the top-x candidates.
      std::vector<std::size_t> retained;
      for (std::size_t mi = 0; mi < doc.mentions.size(); ++mi) {
        if (gold_in_list(candidates[mi], doc.mentions[mi])) retained.push_back(mi);
      }
      c.total = retained.size();
      c.with_candidate = retained.size();
      c.gold_in_candidates = retained.size();
      if (options.dis_keep_graph) {
        // Score on the full graph; count only the retained mentions.
        const auto decisions = link_document(doc, dict, index, link_options);
        for (std::size_t mi : retained) tally(decisions[mi], doc.mentions[mi]);
      } else {
        Document sub;
        sub.id = doc.id;
        sub.mentions.reserve(retained.size());
        for (std::size_t mi : retained) sub.mentions.push_back(doc.mentions[mi]);
        const auto decisions = link_document(sub, dict, index, link_options);
        for (const LinkDecision& d : decisions) tally(d, sub.mentions[d.mention_index]);
      }
    }
    per_doc[di] = c;
  });

  EvalCounts totals;
  for (const EvalCounts& c : per_doc) {
    totals.total += c.total;
    totals.with_candidate += c.with_candidate;
    totals.gold_in_candidates += c.gold_in_candidates;
    totals.linked += c.linked;
    totals.correct += c.correct;
  }
  return finalize_row(measure, mode, totals);
}

EvalReport run_evaluation(std::span<const GoldDataset> datasets, const MentionEntityDict& dict,
                          const EntityLinkIndex& index, std::span<const Measure> measures,
                          std::span<const EvalMode> modes, const EvalOptions& options) {
  EvalReport report;
  for (const GoldDataset& dataset : datasets) {
    DatasetReport dr;
    dr.dataset = dataset.name;
    for (Measure measure : measures) {
      for (EvalMode mode : modes) {
        dr.rows.push_back(evaluate(dataset, dict, index, measure, mode, options));
      }
    }
    report.datasets.push_back(std::move(dr));
  }

  if (!report.datasets.empty()) {
    // Unweighted means per (measure, mode), counts summed as totals. For a
    // single dataset this equals its rows; writers only print AVERAGE rows
    // when more than one dataset was evaluated.
    const std::size_t rows_per_dataset = report.datasets.front().rows.size();
    for (std::size_t r = 0; r < rows_per_dataset; ++r) {
      EvalRow avg = report.datasets.front().rows[r];
      avg.accuracy = avg.precision = avg.recall = avg.f1 = 0.0;
      avg.counts = EvalCounts{};
      for (const DatasetReport& dr : report.datasets) {
        const EvalRow& row = dr.rows[r];
        avg.accuracy += row.accuracy;
        avg.precision += row.precision;
        avg.recall += row.recall;
        avg.f1 += row.f1;
        avg.counts.total += row.counts.total;
        avg.counts.with_candidate += row.counts.with_candidate;
        avg.counts.gold_in_candidates += row.counts.gold_in_candidates;
        avg.counts.linked += row.counts.linked;
        avg.counts.correct += row.counts.correct;
      }
      const double k = static_cast<double>(report.datasets.size());
      avg.accuracy /= k;
      avg.precision /= k;
      avg.recall /= k;
      avg.f1 /= k;
      report.averages.push_back(avg);
    }
  }
  return report;
}

EvalReport compare_measures(std::span<const GoldDataset> datasets, const MentionEntityDict& dict,
                            const EntityLinkIndex& index, const EvalOptions& options) {
  constexpr std::array<EvalMode, 2> kBothModes = {EvalMode::overall, EvalMode::disambiguation};
  return run_evaluation(datasets, dict, index, kAllMeasures, kBothModes, options);
}

namespace {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", fraction * 100.0);
  return buf;
}

void write_row_tsv(std::ostream& out, const std::string& dataset, const EvalRow& row) {
  out << dataset << '\t' << to_string(row.measure) << '\t' << to_string(row.mode) << '\t'
      << percent(row.accuracy) << '\t' << percent(row.f1) << '\t' << percent(row.precision)
      << '\t' << percent(row.recall) << '\t' << row.counts.total << '\t'
      << row.counts.with_candidate << '\t' << row.counts.gold_in_candidates << '\t'
      << row.counts.linked << '\t' << row.counts.correct << '\n';
}

constexpr const char* kMetricNote =
    "accuracy = correct/mentions-in-mode; precision = correct/linked; "
    "recall = correct/mentions-in-mode; f1 = 2PR/(P+R). Percentages. "
    "These precision/recall denominators are this tool's convention (see README). "
    "disambiguation mode drops mentions whose gold entity is outside the top-x candidates.";

}  // namespace

void write_report_tsv(const EvalReport& report, std::ostream& out) {
  out << "# centilink evaluation report\n";
  out << "# " << kMetricNote << "\n";
  out << "# AVERAGE rows: unweighted mean of per-dataset metrics; counts are summed totals.\n";
  out << "dataset\tmethod\tmode\taccuracy\tf1\tprecision\trecall\ttotal\twith_candidate\t"
         "gold_in_candidates\tlinked\tcorrect\n";
  for (const DatasetReport& dr : report.datasets) {
    for (const EvalRow& row : dr.rows) write_row_tsv(out, dr.dataset, row);
  }
  if (report.datasets.size() > 1) {
    for (const EvalRow& row : report.averages) write_row_tsv(out, "AVERAGE", row);
  }
}

namespace {

void write_md_table(std::ostream& out, const std::vector<EvalRow>& rows) {
  out << "| method | mode | accuracy | f1 | precision | recall | total | linked | correct |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const EvalRow& row : rows) {
    out << "| " << to_string(row.measure) << " | " << to_string(row.mode) << " | "
        << percent(row.accuracy) << " | " << percent(row.f1) << " | " << percent(row.precision)
        << " | " << percent(row.recall) << " | " << row.counts.total << " | "
        << row.counts.linked << " | " << row.counts.correct << " |\n";
  }
}

}  // namespace

void write_report_markdown(const EvalReport& report, std::ostream& out) {
  out << "# Evaluation report\n\n";
  out << kMetricNote << "\n";
  for (const DatasetReport& dr : report.datasets) {
    out << "\n## " << dr.dataset << "\n\n";
    write_md_table(out, dr.rows);
  }
  if (report.datasets.size() > 1) {
    out << "\n## Average over " << report.datasets.size() << " datasets\n\n";
    write_md_table(out, report.averages);
  }
}

}  // namespace centilink
