#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "centilink/corpus.hpp"
#include "centilink/entity_index.hpp"
#include "centilink/mention_dict.hpp"

namespace centilink {

inline constexpr const char* kMentionDictTsv = "mention_dict.tsv";
inline constexpr const char* kEntityIndexTsv = "entity_index.tsv";
inline constexpr const char* kMentionDictCache = "mention_dict.bin";
inline constexpr const char* kEntityIndexCache = "entity_index.bin";

struct BuildOptions {
  bool strict_targets = false;  // drop outlinks whose target is not a corpus title
  bool binary_cache = false;    // also write .bin caches next to the TSVs
};

struct BuildResult {
  CorpusStats stats;                 // over the raw corpus, before any filtering
  std::uint64_t dropped_outlinks = 0;  // by --strict-targets
};

// build-dict driver: parses the corpus (twice with strict_targets), writes
// mention_dict.tsv and entity_index.tsv (and optional caches) into out_dir.
BuildResult build_dictionaries(const std::filesystem::path& corpus_path,
                               const std::filesystem::path& out_dir,
                               const BuildOptions& options = {});

struct LoadedDictionaries {
  MentionEntityDict mentions;
  EntityLinkIndex entities;
  std::vector<std::string> warnings;
  bool mentions_from_cache = false;
  bool entities_from_cache = false;
};

// Loads both dictionaries from a directory, preferring a valid binary cache
// and silently falling back to the TSV files.
LoadedDictionaries load_dictionaries(const std::filesystem::path& dict_dir);

}  // namespace centilink
