#include "centilink/mention_dict.hpp"

#include <algorithm>
#include <charconv>

#include "cache_io.hpp"
#include "centilink/errors.hpp"
#include "centilink/text.hpp"

namespace centilink {

namespace {

bool entry_order(const MentionEntry& a, const MentionEntry& b) {
  if (a.count != b.count) return a.count > b.count;
  return a.entity < b.entity;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_number) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw TsvParseError("bad count '" + std::string(field) + "' at line " +
                            std::to_string(line_number),
                        line_number);
  return value;
}

}  // namespace

std::span<const MentionEntry> MentionEntityDict::lookup(std::string_view surface) const {
  const auto it = entries_.find(normalize_mention(surface));
  if (it == entries_.end()) return {};
  return it->second;
}

MentionEntityDict MentionEntityDict::from_counts(
    std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>>&& counts) {
  MentionEntityDict dict;
  dict.entries_.reserve(counts.size());
  for (auto& [mention, per_entity] : counts) {
    std::vector<MentionEntry> list;
    list.reserve(per_entity.size());
    for (auto& [entity, count] : per_entity) {
      dict.total_count_ += count;
      list.push_back(MentionEntry{entity, count});
    }
    std::sort(list.begin(), list.end(), entry_order);
    dict.entries_.emplace(mention, std::move(list));
  }
  counts.clear();
  return dict;
}

void MentionEntityDict::save_tsv(std::ostream& out) const {
  std::vector<const std::string*> mentions;
  mentions.reserve(entries_.size());
  for (const auto& [mention, list] : entries_) mentions.push_back(&mention);
  std::sort(mentions.begin(), mentions.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* mention : mentions) {
    for (const MentionEntry& e : entries_.at(*mention)) {
      out << *mention << '\t' << e.entity << '\t' << e.count << '\n';
    }
  }
}

MentionEntityDict MentionEntityDict::load_tsv(std::istream& in,
                                              std::vector<std::string>* warnings) {
  std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>> counts;
  std::string line;
  std::size_t line_number = 0;
  bool sorted = true;
  bool duplicates = false;
  std::string prev_mention;
  std::string prev_entity;
  std::uint64_t prev_count = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos)
      throw TsvParseError("expected mention<TAB>entity<TAB>count at line " +
                              std::to_string(line_number),
                          line_number);
    std::string mention = line.substr(0, tab1);
    std::string entity = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const std::uint64_t count =
        parse_count(std::string_view(line).substr(tab2 + 1), line_number);

    if (line_number > 1) {
      // Canonical order is (mention asc, count desc, entity asc).
      const bool in_order =
          prev_mention < mention ||
          (prev_mention == mention &&
           (prev_count > count || (prev_count == count && prev_entity < entity)));
      if (!in_order) sorted = false;
    }
    prev_mention = mention;
    prev_entity = entity;
    prev_count = count;

    auto& slot = counts[std::move(mention)][std::move(entity)];
    if (slot != 0) duplicates = true;
    slot += count;
  }

  if (warnings) {
    if (!sorted) warnings->push_back("mention dictionary input not canonically sorted; re-sorted");
    if (duplicates) warnings->push_back("duplicate (mention, entity) lines merged; counts summed");
  }
  return from_counts(std::move(counts));
}

void MentionEntityDict::save_cache(std::ostream& out) const {
  cache::write_header(out, 'M');
  std::vector<const std::string*> mentions;
  mentions.reserve(entries_.size());
  for (const auto& [mention, list] : entries_) mentions.push_back(&mention);
  std::sort(mentions.begin(), mentions.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  cache::put_u64(out, entries_.size());
  for (const std::string* mention : mentions) {
    const auto& list = entries_.at(*mention);
    cache::put_string(out, *mention);
    cache::put_u32(out, static_cast<std::uint32_t>(list.size()));
    for (const MentionEntry& e : list) {
      cache::put_string(out, e.entity);
      cache::put_u64(out, e.count);
    }
  }
}

std::optional<MentionEntityDict> MentionEntityDict::try_load_cache(std::istream& in) {
  if (!cache::check_header(in, 'M')) return std::nullopt;
  std::uint64_t mention_count = 0;
  if (!cache::get_u64(in, mention_count)) return std::nullopt;

  MentionEntityDict dict;
  dict.entries_.reserve(mention_count);
  std::string mention;
  for (std::uint64_t m = 0; m < mention_count; ++m) {
    if (!cache::get_string(in, mention)) return std::nullopt;
    std::uint32_t n_entries = 0;
    if (!cache::get_u32(in, n_entries)) return std::nullopt;
    std::vector<MentionEntry> list;
    list.reserve(n_entries);
    for (std::uint32_t i = 0; i < n_entries; ++i) {
      MentionEntry e;
      if (!cache::get_string(in, e.entity) || !cache::get_u64(in, e.count)) return std::nullopt;
      dict.total_count_ += e.count;
      list.push_back(std::move(e));
    }
    if (!std::is_sorted(list.begin(), list.end(), entry_order)) return std::nullopt;
    dict.entries_.emplace(mention, std::move(list));
  }
  if (!cache::at_clean_eof(in)) return std::nullopt;
  return dict;
}

void MentionDictBuilder::add_page(const RawPage& page) {
  // The title is its own mention once per page; every outlink occurrence
  // counts once.
  counts_[normalize_mention(page.title)][page.title] += 1;
  for (const Outlink& link : page.outlinks) {
    counts_[normalize_mention(link.anchor)][link.target] += 1;
  }
}

void MentionDictBuilder::merge(MentionDictBuilder&& other) {
  if (counts_.empty()) {
    counts_ = std::move(other.counts_);
    return;
  }
  for (auto& [mention, per_entity] : other.counts_) {
    auto& mine = counts_[mention];
    for (auto& [entity, count] : per_entity) mine[entity] += count;
  }
  other.counts_.clear();
}

MentionEntityDict MentionDictBuilder::build() && {
  return MentionEntityDict::from_counts(std::move(counts_));
}

}  // namespace centilink
