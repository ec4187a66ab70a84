#pragma once

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "centilink/graph.hpp"

namespace testutil {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

inline std::filesystem::path data_dir() { return std::filesystem::path(CENTILINK_TEST_DATA); }

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("centilink_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Uniform random digraph without self-loops or parallel edges.
inline std::vector<Edge> random_edges(std::mt19937& rng, std::uint32_t n, double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u != v && coin(rng) < edge_prob) edges.emplace_back(u, v);
    }
  }
  return edges;
}

inline centilink::Digraph make_graph(std::uint32_t n, const std::vector<Edge>& edges) {
  centilink::Digraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Synthetic corpus in the #PAGE record format: page_count pages, each with a
// few outlinks into a small shared title/anchor vocabulary. Deterministic for
// a given seed.
inline void write_synthetic_corpus(const std::filesystem::path& path, std::size_t page_count,
                                   unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> n_links(0, 6);
  std::uniform_int_distribution<std::size_t> pick_page(0, page_count - 1);
  std::uniform_int_distribution<int> pick_anchor(0, 19);

  std::ofstream out(path, std::ios::binary);
  for (std::size_t p = 0; p < page_count; ++p) {
    out << "#PAGE\tPage_" << p << '\n';
    const int k = n_links(rng);
    for (int i = 0; i < k; ++i) {
      out << "anchor " << pick_anchor(rng) << "\tPage_" << pick_page(rng) << '\n';
    }
    out << '\n';
  }
}

// Synthetic gold data for evaluation tests: a dictionary over a small entity
// vocabulary, a random entity graph, and documents whose gold entities are
// drawn from each mention's candidate list (biased toward rank 1).
struct SyntheticEvalData {
  std::filesystem::path dict_dir;
  std::filesystem::path dataset;
};

inline SyntheticEvalData write_synthetic_eval_data(const std::filesystem::path& dir,
                                                   std::size_t doc_count, unsigned seed) {
  namespace fs = std::filesystem;
  std::mt19937 rng(seed);
  fs::create_directories(dir);

  constexpr int kEntities = 160;
  constexpr int kMentions = 120;
  auto entity_name = [](int e) { return "Entity_" + std::to_string(e); };
  auto mention_name = [](int m) { return "mention" + std::to_string(m); };

  // mention -> candidates with strictly decreasing counts (no count ties, so
  // decision tie-breaks are stable under every measure).
  std::uniform_int_distribution<int> n_cands(1, 4);
  std::uniform_int_distribution<int> pick_entity(0, kEntities - 1);
  std::uniform_int_distribution<int> base_count(2, 40);
  std::vector<std::vector<std::pair<std::string, std::uint64_t>>> dict(kMentions);
  for (int m = 0; m < kMentions; ++m) {
    const int k = n_cands(rng);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      const int e = pick_entity(rng);
      bool dup = false;
      for (int c : chosen) dup = dup || c == e;
      if (!dup) chosen.push_back(e);
    }
    std::uint64_t count = base_count(rng) + 4 * static_cast<std::uint64_t>(k);
    for (int c : chosen) {
      dict[m].emplace_back(entity_name(c), count);
      count = count > 3 ? count - (1 + static_cast<std::uint64_t>(base_count(rng)) % (count / 2))
                        : 1;
      if (count == 0) count = 1;
    }
  }

  {
    // Canonical TSV order: mention asc (string order), count desc, entity asc.
    std::vector<std::string> lines;
    for (int m = 0; m < kMentions; ++m) {
      for (const auto& [entity, count] : dict[m]) {
        lines.push_back(mention_name(m) + "\t" + entity + "\t" + std::to_string(count));
      }
    }
    std::sort(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
      const auto key = [](const std::string& s) {
        const auto t1 = s.find('\t');
        const auto t2 = s.find('\t', t1 + 1);
        return std::tuple<std::string, long long, std::string>(
            s.substr(0, t1), -std::stoll(s.substr(t2 + 1)), s.substr(t1 + 1, t2 - t1 - 1));
      };
      return key(a) < key(b);
    });
    std::ofstream out(dir / "mention_dict.tsv", std::ios::binary);
    for (const std::string& line : lines) out << line << '\n';
  }

  {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> lines;
    for (int u = 0; u < kEntities; ++u) {
      for (int v = 0; v < kEntities; ++v) {
        if (u != v && coin(rng) < 0.03)
          lines.push_back(entity_name(u) + "\t" + entity_name(v) + "\t1");
      }
    }
    std::sort(lines.begin(), lines.end());
    std::ofstream out(dir / "entity_index.tsv", std::ios::binary);
    for (const std::string& line : lines) out << line << '\n';
  }

  {
    std::uniform_int_distribution<int> n_mentions(2, 14);
    std::uniform_int_distribution<int> pick_mention(0, kMentions - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::ofstream out(dir / "dataset.jsonl", std::ios::binary);
    for (std::size_t d = 0; d < doc_count; ++d) {
      out << "{\"id\":\"doc" << d << "\",\"mentions\":[";
      const int k = n_mentions(rng);
      for (int i = 0; i < k; ++i) {
        const int m = pick_mention(rng);
        const auto& cands = dict[m];
        // 70% rank-1 gold, otherwise uniform over the candidate list.
        std::size_t g = 0;
        if (cands.size() > 1 && coin(rng) > 0.7) {
          g = 1 + static_cast<std::size_t>(coin(rng) * static_cast<double>(cands.size() - 1));
          if (g >= cands.size()) g = cands.size() - 1;
        }
        if (i > 0) out << ',';
        out << "{\"surface\":\"" << mention_name(m) << "\",\"gold\":\"" << cands[g].first
            << "\"}";
      }
      out << "]}\n";
    }
  }

  return SyntheticEvalData{dir, dir / "dataset.jsonl"};
}

}  // namespace testutil
