#include "centilink/linker.hpp"

#include <nlohmann/json.hpp>

#include "centilink/errors.hpp"
#include "centilink/parallel.hpp"

namespace centilink {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<LinkDecision> popularity_decisions(
    const std::vector<std::vector<Candidate>>& candidates) {
  std::vector<LinkDecision> decisions;
  decisions.reserve(candidates.size());
  for (std::size_t mi = 0; mi < candidates.size(); ++mi) {
    LinkDecision d;
    d.mention_index = mi;
    d.method = Measure::popularity;
    if (!candidates[mi].empty()) {
      d.chosen = candidates[mi].front().entity;
      d.score = candidates[mi].front().popularity;
    }
    decisions.push_back(std::move(d));
  }
  return decisions;
}

}  // namespace

std::vector<LinkDecision> link_document(const Document& doc, const MentionEntityDict& dict,
                                        const EntityLinkIndex& index,
                                        const LinkOptions& options) {
  std::vector<std::vector<Candidate>> candidates;
  candidates.reserve(doc.mentions.size());
  for (const Mention& m : doc.mentions)
    candidates.push_back(top_x(popularity_scores(dict, m.surface), options.top_x));

  if (options.measure == Measure::popularity) return popularity_decisions(candidates);

  const DisambGraph g = build_disamb_graph(candidates, index);
  const CentralityScores centrality = score(g.graph, options.measure, options.iterative);

  // Nodes are laid out mention by mention in candidate order, so within one
  // mention the first node among the max-score ones already carries the
  // (higher count, then entity id) tie-break.
  std::vector<LinkDecision> decisions;
  decisions.reserve(doc.mentions.size());
  std::size_t node = 0;
  for (std::size_t mi = 0; mi < doc.mentions.size(); ++mi) {
    LinkDecision d;
    d.mention_index = mi;
    d.method = options.measure;
    const std::size_t count = candidates[mi].size();
    if (count > 0) {
      std::size_t best = node;
      double min_score = centrality.scores[node];
      for (std::size_t k = node + 1; k < node + count; ++k) {
        if (centrality.scores[k] > centrality.scores[best]) best = k;
        if (centrality.scores[k] < min_score) min_score = centrality.scores[k];
      }
      d.chosen = g.nodes[best].entity;
      d.score = centrality.scores[best];
      d.fallback_used = centrality.scores[best] == min_score;
    }
    decisions.push_back(std::move(d));
    node += count;
  }
  return decisions;
}

std::vector<std::vector<LinkDecision>> link_corpus(const std::vector<Document>& docs,
                                                   const MentionEntityDict& dict,
                                                   const EntityLinkIndex& index,
                                                   const LinkOptions& options, int workers) {
  std::vector<std::vector<LinkDecision>> results(docs.size());
  parallel_for(docs.size(), workers, [&](std::size_t i) {
    try {
      results[i] = link_document(docs[i], dict, index, options);
    } catch (const std::exception& e) {
      throw DataError("document '" + docs[i].id + "': " + e.what());
    }
  });
  return results;
}

DocumentReadResult read_documents_jsonl(std::istream& in, bool require_gold) {
  DocumentReadResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("line " + std::to_string(line_number) + ": invalid JSON: " + e.what());
    }
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string())
      throw DataError("line " + std::to_string(line_number) + ": expected object with string id");

    Document doc;
    doc.id = record["id"].get<std::string>();
    if (record.contains("mentions")) {
      if (!record["mentions"].is_array())
        throw DataError("line " + std::to_string(line_number) + ": mentions must be an array");
      for (const auto& m : record["mentions"]) {
        if (!m.is_object() || !m.contains("surface") || !m["surface"].is_string())
          throw DataError("line " + std::to_string(line_number) +
                          ": mention must be an object with a string surface");
        Mention mention;
        mention.surface = m["surface"].get<std::string>();
        if (mention.surface.empty()) {
          ++result.rejected_mentions;
          result.warnings.push_back("line " + std::to_string(line_number) +
                                    ": rejected mention with empty surface in document '" +
                                    doc.id + "'");
          continue;
        }
        if (m.contains("gold") && m["gold"].is_string() && !m["gold"].get<std::string>().empty())
          mention.gold = m["gold"].get<std::string>();
        if (require_gold && !mention.gold) {
          ++result.rejected_mentions;
          result.warnings.push_back("line " + std::to_string(line_number) +
                                    ": rejected mention '" + mention.surface +
                                    "' without gold entity in document '" + doc.id + "'");
          continue;
        }
        if (m.contains("start") && m.contains("end") && m["start"].is_number_integer() &&
            m["end"].is_number_integer())
          mention.span = std::make_pair(m["start"].get<int>(), m["end"].get<int>());
        doc.mentions.push_back(std::move(mention));
      }
    }
    result.documents.push_back(std::move(doc));
  }
  return result;
}

void write_decisions_jsonl(std::ostream& out, const std::vector<Document>& docs,
                           const std::vector<std::vector<LinkDecision>>& decisions) {
  for (std::size_t i = 0; i < docs.size(); ++i) {
    ordered_json links = ordered_json::array();
    for (const LinkDecision& d : decisions[i]) {
      ordered_json link;
      link["mention"] = docs[i].mentions[d.mention_index].surface;
      if (d.chosen) {
        link["entity"] = *d.chosen;
      } else {
        link["entity"] = nullptr;
      }
      link["score"] = d.score;
      link["fallback"] = d.fallback_used;
      links.push_back(std::move(link));
    }
    ordered_json record;
    record["id"] = docs[i].id;
    record["links"] = std::move(links);
    out << record.dump() << '\n';
  }
}

}  // namespace centilink
