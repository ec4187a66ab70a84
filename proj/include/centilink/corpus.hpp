#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_set>
#include <vector>

#include "centilink/errors.hpp"

namespace centilink {

struct Outlink {
  std::string anchor;
  std::string target;
};

// One page record of the link corpus: the page title plus its outgoing links.
struct RawPage {
  std::string title;
  std::vector<Outlink> outlinks;
};

struct CorpusStats {
  std::uint64_t pages = 0;
  std::uint64_t pages_with_links = 0;
  std::uint64_t mention_pairs = 0;      // title pairs + outlink pairs
  std::uint64_t distinct_mentions = 0;  // over normalized surfaces
};

// Streaming reader for the line-oriented corpus format:
//
//   #PAGE<TAB><title>
//   <anchor_text><TAB><target_title>
//   ...
//   (blank line ends the record)
//
// One record is held in memory at a time; buffers are reused across records,
// so peak memory is bounded by the largest single record, not the corpus.
class CorpusReader {
 public:
  explicit CorpusReader(std::istream& in) : in_(in) {}

  // Fills `page` with the next record, reusing its buffers. Returns false at
  // end of input. Throws CorpusParseError on malformed records.
  bool next(RawPage& page);

  std::size_t records_read() const { return records_read_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t offset_ = 0;       // byte offset of the current line
  std::size_t next_offset_ = 0;  // byte offset after the current line
  std::size_t records_read_ = 0;
  bool getline();
  [[noreturn]] void fail(const std::string& what) const;
};

// Streams the whole corpus and accumulates the Table-2-style counters.
CorpusStats compute_stats(std::istream& in);

// First pass for --strict-targets: the set of titles present in the corpus.
std::unordered_set<std::string> collect_titles(std::istream& in);

}  // namespace centilink
