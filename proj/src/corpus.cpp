#include "centilink/corpus.hpp"

#include <string_view>
#include <unordered_set>

#include "centilink/text.hpp"

namespace centilink {

namespace {

constexpr std::string_view kPageMarker = "#PAGE";

}  // namespace

bool CorpusReader::getline() {
  offset_ = next_offset_;
  if (!std::getline(in_, line_)) return false;
  next_offset_ = offset_ + line_.size() + (in_.eof() ? 0 : 1);
  if (!line_.empty() && line_.back() == '\r') line_.pop_back();
  return true;
}

void CorpusReader::fail(const std::string& what) const {
  throw CorpusParseError(what + " (byte offset " + std::to_string(offset_) + ", record " +
                             std::to_string(records_read_) + ")",
                         offset_, records_read_);
}

bool CorpusReader::next(RawPage& page) {
  page.title.clear();
  page.outlinks.clear();
  bool in_record = false;

  while (getline()) {
    if (line_.empty()) {
      if (in_record) {
        ++records_read_;
        return true;
      }
      continue;  // blank lines between records
    }

    const auto tab = line_.find('\t');
    if (tab == std::string::npos) fail("corpus line has no field separator");
    if (line_.find('\t', tab + 1) != std::string::npos)
      fail("corpus line has more than two fields");
    const std::string_view first(line_.data(), tab);
    const std::string_view second(line_.data() + tab + 1, line_.size() - tab - 1);

    if (first == kPageMarker) {
      if (in_record) fail("page record not terminated by a blank line");
      if (second.empty()) fail("page record with empty title");
      page.title.assign(second);
      in_record = true;
    } else {
      if (!in_record) fail("outlink line outside a page record");
      if (second.empty()) fail("outlink with empty target title");
      page.outlinks.emplace_back(Outlink{std::string(first), std::string(second)});
    }
  }

  if (in_record) {
    ++records_read_;
    return true;  // final record terminated by end of input
  }
  return false;
}

CorpusStats compute_stats(std::istream& in) {
  CorpusStats stats;
  std::unordered_set<std::string> surfaces;
  CorpusReader reader(in);
  RawPage page;
  while (reader.next(page)) {
    ++stats.pages;
    if (!page.outlinks.empty()) ++stats.pages_with_links;
    stats.mention_pairs += 1 + page.outlinks.size();
    surfaces.insert(normalize_mention(page.title));
    for (const Outlink& link : page.outlinks) surfaces.insert(normalize_mention(link.anchor));
  }
  stats.distinct_mentions = surfaces.size();
  return stats;
}

std::unordered_set<std::string> collect_titles(std::istream& in) {
  std::unordered_set<std::string> titles;
  CorpusReader reader(in);
  RawPage page;
  while (reader.next(page)) titles.insert(page.title);
  return titles;
}

}  // namespace centilink
