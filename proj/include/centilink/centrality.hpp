#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "centilink/graph.hpp"

namespace centilink {

enum class Measure {
  popularity,  // prior baseline; not a graph measure
  degree,
  hits,
  pagerank,
  betweenness,
  closeness,
};

inline constexpr std::array<Measure, 6> kAllMeasures = {
    Measure::popularity, Measure::degree,      Measure::hits,
    Measure::pagerank,   Measure::betweenness, Measure::closeness,
};

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

struct IterativeConfig {
  double tolerance = 1e-8;  // L1 change per iteration
  int max_iterations = 100;
  double damping = 0.85;    // PageRank only
};

struct CentralityScores {
  Measure measure = Measure::degree;
  std::vector<double> scores;  // indexed by node id; finite, >= 0
  int iterations_used = 0;     // iterative measures only
  bool converged = true;
};

// In-degree / (n-1); 0 for a single node.
CentralityScores degree_centrality(const Digraph& g);

// HITS authority scores, L1-normalized each iteration. An edgeless graph
// yields all zeros, converged after one iteration.
CentralityScores hits_authority(const Digraph& g, const IterativeConfig& cfg = {});

// Damped PageRank with uniform teleport and uniform dangling-mass
// redistribution; scores sum to 1. damping = 1 recovers the undamped update
// (dangling mass still redistributed) where it converges.
CentralityScores pagerank(const Digraph& g, const IterativeConfig& cfg = {});

// Exact directed unweighted betweenness, endpoints excluded, unnormalized.
CentralityScores betweenness(const Digraph& g);

// Reachable-set-rescaled closeness over directed distances TO the node:
// (r/(n-1)) * (r / sum of d(j,i) over the r nodes that reach i); 0 when
// nothing reaches i.
CentralityScores closeness(const Digraph& g);

// Dispatch over the five graph measures. Measure::popularity (or anything
// else) is an argument error.
CentralityScores score(const Digraph& g, Measure m, const IterativeConfig& cfg = {});

}  // namespace centilink
