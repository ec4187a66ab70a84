#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <queue>

namespace oracle {

namespace {

std::vector<std::vector<int>> dense_matrix(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : edges) a[u][v] = 1;
  return a;
}

// BFS distances from s along forward edges of the dense matrix; -1 = unreachable.
std::vector<int> bfs(const std::vector<std::vector<int>>& a, std::uint32_t s) {
  const std::uint32_t n = static_cast<std::uint32_t>(a.size());
  std::vector<int> dist(n, -1);
  std::queue<std::uint32_t> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const std::uint32_t v = q.front();
    q.pop();
    for (std::uint32_t w = 0; w < n; ++w) {
      if (a[v][w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> degree(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<double> scores(n, 0.0);
  if (n < 2) return scores;
  for (const auto& edge : edges) scores[edge.second] += 1.0;
  for (double& s : scores) s /= static_cast<double>(n - 1);
  return scores;
}

std::vector<double> hits_dense(std::uint32_t n, const std::vector<Edge>& edges, double tolerance,
                               int max_iterations) {
  std::vector<double> z(n, 0.0);
  if (n == 0 || edges.empty()) return z;
  const auto a = dense_matrix(n, edges);

  // m = A^T A, so z'(i) = sum_j m[i][j] z(j).
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      int sum = 0;
      for (std::uint32_t k = 0; k < n; ++k) sum += a[k][i] * a[k][j];
      m[i][j] = sum;
    }
  }

  // Start from the first authority vector a uniform hub assignment induces,
  // x(1) = A^T u; power iteration then walks the same subspace trajectory the
  // interleaved x/y updates do, so degenerate eigenspaces agree too.
  {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t k = 0; k < n; ++k) sum += a[k][i] * inv_n;
      z[i] = sum;
    }
    double mass = 0.0;
    for (double v : z) mass += std::fabs(v);
    if (mass > 0) {
      for (double& v : z) v /= mass;
    }
  }
  std::vector<double> next(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (std::uint32_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t j = 0; j < n; ++j) sum += m[i][j] * z[j];
      next[i] = sum;
    }
    double mass = 0.0;
    for (double v : next) mass += std::fabs(v);
    if (mass > 0) {
      for (double& v : next) v /= mass;
    }
    double delta = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) delta += std::fabs(next[i] - z[i]);
    z = next;
    if (delta < tolerance) break;
  }
  return z;
}

std::vector<double> pagerank_dense(std::uint32_t n, const std::vector<Edge>& edges,
                                   double damping, double tolerance, int max_iterations) {
  if (n == 0) return {};
  const auto a = dense_matrix(n, edges);
  const double inv_n = 1.0 / static_cast<double>(n);

  // Column-stochastic transition: column j spreads over j's out-neighbors, or
  // uniformly everywhere when j dangles.
  std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
  for (std::uint32_t j = 0; j < n; ++j) {
    int outdeg = 0;
    for (std::uint32_t i = 0; i < n; ++i) outdeg += a[j][i];
    for (std::uint32_t i = 0; i < n; ++i) {
      t[i][j] = outdeg == 0 ? inv_n : static_cast<double>(a[j][i]) / outdeg;
    }
  }

  std::vector<double> rank(n, inv_n), next(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (std::uint32_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t j = 0; j < n; ++j) sum += t[i][j] * rank[j];
      next[i] = (1.0 - damping) * inv_n + damping * sum;
    }
    double delta = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) delta += std::fabs(next[i] - rank[i]);
    rank = next;
    if (delta < tolerance) break;
  }
  return rank;
}

std::vector<double> betweenness_paths(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<double> scores(n, 0.0);
  if (n < 3) return scores;
  const auto a = dense_matrix(n, edges);

  for (std::uint32_t s = 0; s < n; ++s) {
    const std::vector<int> dist = bfs(a, s);
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == s || dist[t] < 2) continue;  // no interior node possible
      std::uint64_t total_paths = 0;
      std::vector<std::uint64_t> through(n, 0);
      std::vector<std::uint32_t> path;  // interior nodes of the walk so far

      // Walks that always step one BFS level deeper end at t with length
      // dist[t]; enumerating them enumerates exactly the shortest paths.
      std::function<void(std::uint32_t)> walk = [&](std::uint32_t v) {
        if (v == t) {
          ++total_paths;
          for (std::uint32_t interior : path) ++through[interior];
          return;
        }
        for (std::uint32_t w = 0; w < n; ++w) {
          if (!a[v][w] || dist[w] != dist[v] + 1 || dist[w] > dist[t]) continue;
          if (w != t) path.push_back(w);
          walk(w);
          if (w != t) path.pop_back();
        }
      };
      walk(s);
      if (total_paths == 0) continue;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (v != s && v != t && through[v] > 0)
          scores[v] += static_cast<double>(through[v]) / static_cast<double>(total_paths);
      }
    }
  }
  return scores;
}

std::vector<double> closeness_bfs(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<double> scores(n, 0.0);
  if (n < 2) return scores;
  const auto a = dense_matrix(n, edges);

  // dist_from[j][i] = d(j, i) along forward edges.
  std::vector<std::vector<int>> dist_from(n);
  for (std::uint32_t j = 0; j < n; ++j) dist_from[j] = bfs(a, j);

  for (std::uint32_t i = 0; i < n; ++i) {
    double reach = 0.0, sum = 0.0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j == i || dist_from[j][i] < 0) continue;
      reach += 1.0;
      sum += dist_from[j][i];
    }
    if (reach > 0) scores[i] = (reach / static_cast<double>(n - 1)) * (reach / sum);
  }
  return scores;
}

}  // namespace oracle
