#include "centilink/candidates.hpp"

#include <stdexcept>

namespace centilink {

std::vector<Candidate> popularity_scores(const MentionEntityDict& dict,
                                         std::string_view surface) {
  const auto entries = dict.lookup(surface);
  std::vector<Candidate> candidates;
  if (entries.empty()) return candidates;

  std::uint64_t total = 0;
  for (const MentionEntry& e : entries) total += e.count;

  candidates.reserve(entries.size());
  int rank = 0;
  for (const MentionEntry& e : entries) {
    ++rank;
    candidates.push_back(Candidate{
        e.entity,
        e.count,
        static_cast<double>(e.count) / static_cast<double>(total),
        rank,
    });
  }
  return candidates;
}

std::vector<Candidate> top_x(std::vector<Candidate> candidates, int x) {
  if (x < 1) throw std::invalid_argument("top_x: x must be >= 1");
  if (candidates.size() > static_cast<std::size_t>(x)) candidates.resize(x);
  return candidates;
}

}  // namespace centilink
