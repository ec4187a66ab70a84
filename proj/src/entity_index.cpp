#include "centilink/entity_index.hpp"

#include <algorithm>
#include <charconv>

#include "cache_io.hpp"
#include "centilink/errors.hpp"

namespace centilink {

namespace {

std::uint64_t pack(std::uint32_t u, std::uint32_t v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
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

void EntityIndexBuilder::add_page(const RawPage& page) {
  if (page.outlinks.empty()) {
    counts_[page.title];  // entity present with an empty out-neighbor set
    return;
  }
  auto& targets = counts_[page.title];
  for (const Outlink& link : page.outlinks) targets[link.target] += 1;
}

void EntityIndexBuilder::merge(EntityIndexBuilder&& other) {
  if (counts_.empty()) {
    counts_ = std::move(other.counts_);
    return;
  }
  for (auto& [source, targets] : other.counts_) {
    auto& mine = counts_[source];
    for (auto& [target, count] : targets) mine[target] += count;
  }
  other.counts_.clear();
}

std::vector<EdgeRecord> EntityIndexBuilder::edges() const {
  std::vector<EdgeRecord> out;
  for (const auto& [source, targets] : counts_) {
    for (const auto& [target, count] : targets) out.push_back(EdgeRecord{source, target, count});
  }
  std::sort(out.begin(), out.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  return out;
}

std::size_t EntityIndexBuilder::distinct_edge_count() const {
  std::size_t n = 0;
  for (const auto& [source, targets] : counts_) n += targets.size();
  return n;
}

bool EntityIndexBuilder::has_source(std::string_view source) const {
  return counts_.contains(std::string(source));
}

std::size_t EntityIndexBuilder::out_degree(std::string_view source) const {
  const auto it = counts_.find(std::string(source));
  return it == counts_.end() ? 0 : it->second.size();
}

void EntityIndexBuilder::save_tsv(std::ostream& out) const {
  for (const EdgeRecord& e : edges()) {
    out << e.source << '\t' << e.target << '\t' << e.count << '\n';
  }
}

std::uint32_t EntityLinkIndex::intern(std::string_view name) {
  const auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<std::uint32_t> EntityLinkIndex::id_of(std::string_view name) const {
  // Transparent hashing would avoid this copy; lookup volume is per-candidate
  // pair, small next to the ingest cost.
  const auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

EntityLinkIndex EntityLinkIndex::load_tsv(std::istream& in, std::vector<std::string>* warnings) {
  EntityLinkIndex index;
  std::string line;
  std::size_t line_number = 0;
  bool sorted = true;
  bool duplicates = false;
  std::string prev_source, prev_target;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos)
      throw TsvParseError("expected source<TAB>target<TAB>count at line " +
                              std::to_string(line_number),
                          line_number);
    const std::string_view source = std::string_view(line).substr(0, tab1);
    const std::string_view target = std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1);
    const std::uint64_t count =
        parse_count(std::string_view(line).substr(tab2 + 1), line_number);
    if (source.empty() || target.empty())
      throw TsvParseError("empty entity id at line " + std::to_string(line_number), line_number);

    if (line_number > 1) {
      const bool in_order =
          prev_source < source || (prev_source == source && prev_target <= target);
      if (!in_order) sorted = false;
      if (prev_source == source && prev_target == target) duplicates = true;
    }
    prev_source.assign(source);
    prev_target.assign(target);

    if (source == target) {
      ++index.dropped_self_loops_;
      continue;
    }
    const std::uint32_t u = index.intern(source);
    const std::uint32_t v = index.intern(target);
    index.edges_[pack(u, v)] += count;
  }

  if (warnings) {
    if (!sorted) warnings->push_back("entity index input not canonically sorted");
    if (duplicates) warnings->push_back("duplicate (source, target) lines merged; counts summed");
  }
  return index;
}

bool EntityLinkIndex::has_edge(std::string_view source, std::string_view target) const {
  const auto u = id_of(source);
  if (!u) return false;
  const auto v = id_of(target);
  if (!v) return false;
  return edges_.contains(pack(*u, *v));
}

std::uint64_t EntityLinkIndex::edge_occurrences(std::string_view source,
                                                std::string_view target) const {
  const auto u = id_of(source);
  if (!u) return 0;
  const auto v = id_of(target);
  if (!v) return 0;
  const auto it = edges_.find(pack(*u, *v));
  return it == edges_.end() ? 0 : it->second;
}

void EntityLinkIndex::save_cache(std::ostream& out) const {
  cache::write_header(out, 'E');
  cache::put_u32(out, static_cast<std::uint32_t>(names_.size()));
  for (const std::string& name : names_) cache::put_string(out, name);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted_edges(edges_.begin(), edges_.end());
  std::sort(sorted_edges.begin(), sorted_edges.end());
  cache::put_u64(out, sorted_edges.size());
  for (const auto& [key, count] : sorted_edges) {
    cache::put_u64(out, key);
    cache::put_u64(out, count);
  }
  cache::put_u64(out, dropped_self_loops_);
}

std::optional<EntityLinkIndex> EntityLinkIndex::try_load_cache(std::istream& in) {
  if (!cache::check_header(in, 'E')) return std::nullopt;
  std::uint32_t name_count = 0;
  if (!cache::get_u32(in, name_count)) return std::nullopt;

  EntityLinkIndex index;
  index.names_.reserve(name_count);
  std::string name;
  for (std::uint32_t i = 0; i < name_count; ++i) {
    if (!cache::get_string(in, name) || name.empty()) return std::nullopt;
    index.names_.push_back(name);
    if (!index.ids_.emplace(name, i).second) return std::nullopt;
  }
  std::uint64_t edge_count = 0;
  if (!cache::get_u64(in, edge_count)) return std::nullopt;
  index.edges_.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    std::uint64_t key = 0, count = 0;
    if (!cache::get_u64(in, key) || !cache::get_u64(in, count)) return std::nullopt;
    const auto u = static_cast<std::uint32_t>(key >> 32);
    const auto v = static_cast<std::uint32_t>(key & 0xffffffffu);
    if (u >= name_count || v >= name_count || u == v) return std::nullopt;
    index.edges_[key] = count;
  }
  if (!cache::get_u64(in, index.dropped_self_loops_)) return std::nullopt;
  if (!cache::at_clean_eof(in)) return std::nullopt;
  return index;
}

}  // namespace centilink
