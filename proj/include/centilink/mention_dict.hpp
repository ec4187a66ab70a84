#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "centilink/corpus.hpp"

namespace centilink {

struct MentionEntry {
  std::string entity;
  std::uint64_t count = 0;
};

// Mention surface -> candidate entities, ordered by (-count, entity).
// Immutable once built; lookups normalize the surface the same way the
// builder does, so "Sun" and "sun" hit the same entry.
class MentionEntityDict {
 public:
  std::span<const MentionEntry> lookup(std::string_view surface) const;

  std::size_t mention_count() const { return entries_.size(); }
  std::uint64_t total_count() const { return total_count_; }

  // TSV persistence: `mention<TAB>entity<TAB>count`, sorted by
  // (mention, -count, entity). save(load(x)) is byte-identical for canonical
  // input. Loading tolerates unsorted files and duplicate (mention, entity)
  // lines (counts are summed); both produce a warning.
  void save_tsv(std::ostream& out) const;
  static MentionEntityDict load_tsv(std::istream& in,
                                    std::vector<std::string>* warnings = nullptr);

  // Compact binary cache. try_load_cache returns nullopt on any mismatch
  // (magic, version, truncation); callers then rebuild from TSV.
  void save_cache(std::ostream& out) const;
  static std::optional<MentionEntityDict> try_load_cache(std::istream& in);

  // Takes per-mention (entity -> count) maps; sorts each list canonically.
  static MentionEntityDict from_counts(
      std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>>&& counts);

 private:
  std::unordered_map<std::string, std::vector<MentionEntry>> entries_;
  std::uint64_t total_count_ = 0;
};

// Accumulates mention-entity pair counts from page records. Builders can be
// filled on shard workers and merged; counts are commutative, and the final
// dictionary order does not depend on merge order.
class MentionDictBuilder {
 public:
  void add_page(const RawPage& page);
  void merge(MentionDictBuilder&& other);
  MentionEntityDict build() &&;

 private:
  std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>> counts_;
};

}  // namespace centilink
