#include "centilink/build.hpp"

#include <fstream>

#include "centilink/errors.hpp"
#include "centilink/text.hpp"

namespace centilink {

namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const fs::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

}  // namespace

BuildResult build_dictionaries(const fs::path& corpus_path, const fs::path& out_dir,
                               const BuildOptions& options) {
  std::unordered_set<std::string> titles;
  if (options.strict_targets) {
    auto in = open_input(corpus_path);
    titles = collect_titles(in);
  }

  BuildResult result;
  MentionDictBuilder mention_builder;
  EntityIndexBuilder entity_builder;
  std::unordered_set<std::string> surfaces;

  {
    auto in = open_input(corpus_path);
    CorpusReader reader(in);
    RawPage page;
    RawPage filtered;
    while (reader.next(page)) {
      ++result.stats.pages;
      if (!page.outlinks.empty()) ++result.stats.pages_with_links;
      result.stats.mention_pairs += 1 + page.outlinks.size();
      surfaces.insert(normalize_mention(page.title));
      for (const Outlink& link : page.outlinks) surfaces.insert(normalize_mention(link.anchor));

      const RawPage* effective = &page;
      if (options.strict_targets) {
        filtered.title = page.title;
        filtered.outlinks.clear();
        for (const Outlink& link : page.outlinks) {
          if (titles.contains(link.target)) {
            filtered.outlinks.push_back(link);
          } else {
            ++result.dropped_outlinks;
          }
        }
        effective = &filtered;
      }
      mention_builder.add_page(*effective);
      entity_builder.add_page(*effective);
    }
  }
  result.stats.distinct_mentions = surfaces.size();

  fs::create_directories(out_dir);
  const MentionEntityDict dict = std::move(mention_builder).build();
  {
    auto out = open_output(out_dir / kMentionDictTsv);
    dict.save_tsv(out);
  }
  {
    auto out = open_output(out_dir / kEntityIndexTsv);
    entity_builder.save_tsv(out);
  }
  if (options.binary_cache) {
    {
      auto out = open_output(out_dir / kMentionDictCache, std::ios::binary);
      dict.save_cache(out);
    }
    auto tsv = open_input(out_dir / kEntityIndexTsv);
    const EntityLinkIndex index = EntityLinkIndex::load_tsv(tsv);
    auto out = open_output(out_dir / kEntityIndexCache, std::ios::binary);
    index.save_cache(out);
  }
  return result;
}

LoadedDictionaries load_dictionaries(const fs::path& dict_dir) {
  LoadedDictionaries loaded;

  const fs::path mention_cache = dict_dir / kMentionDictCache;
  bool have_mentions = false;
  if (fs::exists(mention_cache)) {
    std::ifstream in(mention_cache, std::ios::binary);
    if (auto dict = MentionEntityDict::try_load_cache(in)) {
      loaded.mentions = std::move(*dict);
      loaded.mentions_from_cache = true;
      have_mentions = true;
    }
  }
  if (!have_mentions) {
    auto in = open_input(dict_dir / kMentionDictTsv);
    loaded.mentions = MentionEntityDict::load_tsv(in, &loaded.warnings);
  }

  const fs::path entity_cache = dict_dir / kEntityIndexCache;
  bool have_entities = false;
  if (fs::exists(entity_cache)) {
    std::ifstream in(entity_cache, std::ios::binary);
    if (auto index = EntityLinkIndex::try_load_cache(in)) {
      loaded.entities = std::move(*index);
      loaded.entities_from_cache = true;
      have_entities = true;
    }
  }
  if (!have_entities) {
    auto in = open_input(dict_dir / kEntityIndexTsv);
    loaded.entities = EntityLinkIndex::load_tsv(in, &loaded.warnings);
  }

  return loaded;
}

}  // namespace centilink
