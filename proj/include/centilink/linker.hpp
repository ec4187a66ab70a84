#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "centilink/centrality.hpp"
#include "centilink/entity_index.hpp"
#include "centilink/graph.hpp"
#include "centilink/mention_dict.hpp"

namespace centilink {

struct Mention {
  std::string surface;
  std::optional<std::pair<int, int>> span;  // character offsets
  std::optional<std::string> gold;
};

struct Document {
  std::string id;
  std::vector<Mention> mentions;
};

struct LinkDecision {
  std::size_t mention_index = 0;
  std::optional<std::string> chosen;  // absent iff the mention had no candidates
  double score = 0.0;
  Measure method = Measure::popularity;
  bool fallback_used = false;  // centrality tied at the minimum; popularity decided
};

struct LinkOptions {
  Measure measure = Measure::degree;
  int top_x = 3;
  IterativeConfig iterative;
};

// Candidate selection -> disambiguation graph -> centrality -> per-mention
// argmax over that mention's own nodes, ties broken by (higher count, then
// entity id). measure = popularity skips the graph and takes the rank-1
// candidate.
std::vector<LinkDecision> link_document(const Document& doc,
                                        const MentionEntityDict& dict,
                                        const EntityLinkIndex& index,
                                        const LinkOptions& options);

// Maps link_document over the batch; documents are independent, so the result
// does not depend on worker count or batch order. Per-document failures are
// rethrown with the document id attached.
std::vector<std::vector<LinkDecision>> link_corpus(const std::vector<Document>& docs,
                                                   const MentionEntityDict& dict,
                                                   const EntityLinkIndex& index,
                                                   const LinkOptions& options,
                                                   int workers = 1);

// JSONL document I/O. One object per line:
//   {"id": str, "mentions": [{"surface": str, "gold"?: str, "start"?: int, "end"?: int}]}
// With require_gold, mentions missing a non-empty gold entity are rejected
// (warning + count); without it, gold is optional.
struct DocumentReadResult {
  std::vector<Document> documents;
  std::size_t rejected_mentions = 0;
  std::vector<std::string> warnings;
};

DocumentReadResult read_documents_jsonl(std::istream& in, bool require_gold);

// One object per document:
//   {"id": ..., "links": [{"mention": ..., "entity": ...|null, "score": ..., "fallback": ...}]}
void write_decisions_jsonl(std::ostream& out, const std::vector<Document>& docs,
                           const std::vector<std::vector<LinkDecision>>& decisions);

}  // namespace centilink
