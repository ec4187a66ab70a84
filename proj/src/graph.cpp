#include "centilink/graph.hpp"

#include <cassert>

namespace centilink {

void Digraph::add_edge(std::uint32_t from, std::uint32_t to) {
  assert(from < node_count() && to < node_count());
  assert(from != to);
  out_[from].push_back(to);
  in_[to].push_back(from);
  ++edge_count_;
}

DisambGraph build_disamb_graph(const std::vector<std::vector<Candidate>>& mention_candidates,
                               const EntityLinkIndex& index) {
  DisambGraph g;
  for (std::size_t mi = 0; mi < mention_candidates.size(); ++mi) {
    for (const Candidate& c : mention_candidates[mi]) {
      g.nodes.push_back(DisambNode{
          static_cast<std::uint32_t>(mi), c.entity, c.rank, c.count, c.popularity});
    }
  }

  const auto n = static_cast<std::uint32_t>(g.nodes.size());
  g.graph = Digraph(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u == v) continue;
      // Candidates competing for the same mention never link to each other.
      if (g.nodes[u].mention == g.nodes[v].mention) continue;
      if (index.has_edge(g.nodes[u].entity, g.nodes[v].entity)) g.graph.add_edge(u, v);
    }
  }
  return g;
}

void write_dot(const DisambGraph& g, std::ostream& out, std::string_view name) {
  out << "digraph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const DisambNode& node = g.nodes[i];
    out << "  n" << i << " [label=\"" << node.entity << "\\nmention " << node.mention
        << "\"];\n";
  }
  for (std::uint32_t u = 0; u < g.graph.node_count(); ++u) {
    for (std::uint32_t v : g.graph.out(u)) {
      out << "  n" << u << " -> n" << v << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace centilink
