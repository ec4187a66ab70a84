#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "centilink/mention_dict.hpp"

namespace centilink {

struct Candidate {
  std::string entity;
  std::uint64_t count = 0;
  double popularity = 0.0;  // count / sum of counts over ALL entities of the mention
  int rank = 0;             // 1-based popularity rank within the mention
};

// Full candidate list for a surface, in dictionary order, with popularity
// normalized over the complete entity list. Empty for unseen mentions.
std::vector<Candidate> popularity_scores(const MentionEntityDict& dict,
                                         std::string_view surface);

// First min(x, size) candidates, ranks preserved. Throws std::invalid_argument
// for x < 1. Popularity stays normalized over the full list, so the retained
// probabilities do not sum to 1 when candidates were cut off.
std::vector<Candidate> top_x(std::vector<Candidate> candidates, int x);

}  // namespace centilink
