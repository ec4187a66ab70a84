#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "centilink/corpus.hpp"

namespace centilink {

struct EdgeRecord {
  std::string source;
  std::string target;
  std::uint64_t count = 0;
};

// Accumulates directed entity->entity links from page outlinks. Duplicate
// (source, target) pairs collapse to one record with an occurrence count.
// Self-loops are kept here (the persisted edge list mirrors the corpus);
// they are dropped when an EntityLinkIndex is loaded.
class EntityIndexBuilder {
 public:
  void add_page(const RawPage& page);
  void merge(EntityIndexBuilder&& other);

  // Sorted by (source, target), one `source<TAB>target<TAB>count` line each.
  void save_tsv(std::ostream& out) const;

  // Canonically sorted edge list, for tests and inspection.
  std::vector<EdgeRecord> edges() const;
  std::size_t distinct_edge_count() const;

  // A page with zero outlinks still registers its entity.
  bool has_source(std::string_view source) const;
  std::size_t out_degree(std::string_view source) const;

 private:
  std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>> counts_;
};

// Read-only membership index over the entity-entity links. Immutable after
// load and safe to share across linking workers. Self-loops are dropped at
// load; has_edge is a hash probe, independent of total edge count.
class EntityLinkIndex {
 public:
  static EntityLinkIndex load_tsv(std::istream& in,
                                  std::vector<std::string>* warnings = nullptr);

  void save_cache(std::ostream& out) const;
  static std::optional<EntityLinkIndex> try_load_cache(std::istream& in);

  bool has_edge(std::string_view source, std::string_view target) const;
  std::uint64_t edge_occurrences(std::string_view source, std::string_view target) const;

  std::size_t entity_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::uint64_t dropped_self_loops() const { return dropped_self_loops_; }

 private:
  std::uint32_t intern(std::string_view name);
  std::optional<std::uint32_t> id_of(std::string_view name) const;

  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
  std::unordered_map<std::uint64_t, std::uint64_t> edges_;  // packed (u,v) -> count
  std::uint64_t dropped_self_loops_ = 0;
};

}  // namespace centilink
