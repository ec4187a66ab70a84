#include "centilink/centrality.hpp"

#include <algorithm>
#include <stdexcept>

#include "centilink/kernels.hpp"

namespace centilink {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::popularity: return "popularity";
    case Measure::degree: return "degree";
    case Measure::hits: return "hits";
    case Measure::pagerank: return "pagerank";
    case Measure::betweenness: return "betweenness";
    case Measure::closeness: return "closeness";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

namespace {

void check_config(const IterativeConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
  if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(cfg.damping > 0.0) || cfg.damping > 1.0)
    throw std::invalid_argument("damping must be in (0, 1]");
}

}  // namespace

CentralityScores degree_centrality(const Digraph& g) {
  const std::size_t n = g.node_count();
  CentralityScores result{Measure::degree, std::vector<double>(n, 0.0), 0, true};
  if (n > 1) {
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      result.scores[i] = static_cast<double>(g.in(static_cast<std::uint32_t>(i)).size()) / denom;
  }
  return result;
}

CentralityScores hits_authority(const Digraph& g, const IterativeConfig& cfg) {
  check_config(cfg);
  const std::size_t n = g.node_count();
  CentralityScores result{Measure::hits, std::vector<double>(n, 0.0), 1, true};
  if (g.edge_count() == 0) return result;  // all zero, converged after one step

  std::vector<double> authority(n, 1.0 / static_cast<double>(n));
  std::vector<double> hub = authority;
  std::vector<double> next_authority(n), next_hub(n);

  for (int k = 1; k <= cfg.max_iterations; ++k) {
    // x_i <- sum of hub scores over in-edges, then y_i <- sum of the fresh
    // authority scores over out-edges; both L1-normalized.
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t j : g.in(static_cast<std::uint32_t>(i))) sum += hub[j];
      next_authority[i] = sum;
    }
    const double authority_mass = kernels::l1_norm(next_authority);
    if (authority_mass > 0) kernels::scale(next_authority, 1.0 / authority_mass);

    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t j : g.out(static_cast<std::uint32_t>(i))) sum += next_authority[j];
      next_hub[i] = sum;
    }
    const double hub_mass = kernels::l1_norm(next_hub);
    if (hub_mass > 0) kernels::scale(next_hub, 1.0 / hub_mass);

    // Authority change alone can be zero while hubs still move (uniform
    // in-degree graphs stall it at k = 1), so both vectors must settle.
    const double delta = kernels::l1_distance(next_authority, authority);
    const double hub_delta = kernels::l1_distance(next_hub, hub);
    authority.swap(next_authority);
    hub.swap(next_hub);
    result.iterations_used = k;
    if (delta < cfg.tolerance && hub_delta < cfg.tolerance) {
      result.converged = true;
      result.scores = std::move(authority);
      return result;
    }
  }
  result.converged = false;
  result.scores = std::move(authority);
  return result;
}

CentralityScores pagerank(const Digraph& g, const IterativeConfig& cfg) {
  check_config(cfg);
  const std::size_t n = g.node_count();
  CentralityScores result{Measure::pagerank, std::vector<double>(n, 0.0), 0, true};
  if (n == 0) return result;

  const double d = cfg.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n);
  std::vector<double> contrib(n);
  std::vector<double> inv_outdeg(n, 0.0);
  std::vector<std::uint32_t> dangling;
  for (std::size_t i = 0; i < n; ++i) {
    const auto deg = g.out(static_cast<std::uint32_t>(i)).size();
    if (deg == 0) {
      dangling.push_back(static_cast<std::uint32_t>(i));
    } else {
      inv_outdeg[i] = 1.0 / static_cast<double>(deg);
    }
  }

  std::vector<double> next(n);
  for (int k = 1; k <= cfg.max_iterations; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t j : g.in(static_cast<std::uint32_t>(i))) sum += rank[j] * inv_outdeg[j];
      contrib[i] = sum;
    }
    double dangling_mass = 0.0;
    for (std::uint32_t j : dangling) dangling_mass += rank[j];
    const double base = (1.0 - d) * inv_n + d * dangling_mass * inv_n;
    kernels::scale_add(next, contrib, d, base);

    const double delta = kernels::l1_distance(next, rank);
    rank.swap(next);
    result.iterations_used = k;
    if (delta < cfg.tolerance) {
      result.converged = true;
      result.scores = std::move(rank);
      return result;
    }
  }
  result.converged = false;
  result.scores = std::move(rank);
  return result;
}

CentralityScores betweenness(const Digraph& g) {
  const std::size_t n = g.node_count();
  CentralityScores result{Measure::betweenness, std::vector<double>(n, 0.0), 0, true};
  if (n < 3) return result;  // no pair has an intermediate

  // Brandes accumulation over unweighted shortest paths, endpoints excluded.
  std::vector<int> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<std::uint32_t>> preds(n);
  std::vector<std::uint32_t> order, queue;
  order.reserve(n);
  queue.reserve(n);

  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();
    queue.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t v = queue[head];
      order.push_back(v);
      for (std::uint32_t w : g.out(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::uint32_t w = *it;
      for (std::uint32_t v : preds[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) result.scores[w] += delta[w];
    }
  }
  return result;
}

CentralityScores closeness(const Digraph& g) {
  const std::size_t n = g.node_count();
  CentralityScores result{Measure::closeness, std::vector<double>(n, 0.0), 0, true};
  if (n < 2) return result;

  std::vector<int> dist(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);

  for (std::uint32_t i = 0; i < n; ++i) {
    // BFS along in-edges gives d(j, i): the directed distance TO i.
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[i] = 0;
    queue.push_back(i);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t v = queue[head];
      for (std::uint32_t u : g.in(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }

    double reach = 0.0;
    double dist_sum = 0.0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j == i || dist[j] < 0) continue;
      reach += 1.0;
      dist_sum += dist[j];
    }
    if (reach > 0) {
      // Wasserman-Faust rescaling; reduces to (n-1)/sum(d) on strongly
      // connected graphs and stays defined when some nodes cannot reach i.
      result.scores[i] = (reach / static_cast<double>(n - 1)) * (reach / dist_sum);
    }
  }
  return result;
}

CentralityScores score(const Digraph& g, Measure m, const IterativeConfig& cfg) {
  switch (m) {
    case Measure::degree: return degree_centrality(g);
    case Measure::hits: return hits_authority(g, cfg);
    case Measure::pagerank: return pagerank(g, cfg);
    case Measure::betweenness: return betweenness(g);
    case Measure::closeness: return closeness(g);
    case Measure::popularity: break;
  }
  throw std::invalid_argument("score: not a graph centrality measure: " +
                              std::string(to_string(m)));
}

}  // namespace centilink
