#pragma once

// Brute-force reference implementations for the centrality tests. These stay
// deliberately dense and naive: adjacency matrices, explicit path
// enumeration, all-pairs BFS. They share no code with the library's
// CSR/Brandes/reverse-BFS paths.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

std::vector<double> degree(std::uint32_t n, const std::vector<Edge>& edges);

// Power iteration z <- (A^T A) z on the dense adjacency matrix, L1-normalized
// each step; returns the authority vector.
std::vector<double> hits_dense(std::uint32_t n, const std::vector<Edge>& edges, double tolerance,
                               int max_iterations);

// Dense damped PageRank with uniform teleport and uniform dangling
// redistribution.
std::vector<double> pagerank_dense(std::uint32_t n, const std::vector<Edge>& edges,
                                   double damping, double tolerance, int max_iterations);

// Enumerates every shortest path of every (s, t) pair and counts interior
// visits.
std::vector<double> betweenness_paths(std::uint32_t n, const std::vector<Edge>& edges);

// All-pairs BFS along forward edges; closeness of i read off column i.
std::vector<double> closeness_bfs(std::uint32_t n, const std::vector<Edge>& edges);

}  // namespace oracle
