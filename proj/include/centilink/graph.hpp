#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "centilink/candidates.hpp"
#include "centilink/entity_index.hpp"

namespace centilink {

// Directed graph with adjacency kept in both directions. Node ids are dense
// [0, n). No self-loops, no parallel edges.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t node_count) : out_(node_count), in_(node_count) {}

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(std::uint32_t from, std::uint32_t to);

  std::span<const std::uint32_t> out(std::uint32_t v) const { return out_[v]; }
  std::span<const std::uint32_t> in(std::uint32_t v) const { return in_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::size_t edge_count_ = 0;
};

// A candidate entity bound to the mention it competes for. The same entity
// proposed for two mentions yields two distinct nodes.
struct DisambNode {
  std::uint32_t mention = 0;  // index of the owning mention
  std::string entity;
  int rank = 0;
  std::uint64_t count = 0;
  double popularity = 0.0;
};

// Per-document disambiguation graph: nodes are the retained candidates of all
// mentions, and a directed edge u->v exists iff the entity index has the link
// u.entity -> v.entity and u, v belong to different mentions.
struct DisambGraph {
  std::vector<DisambNode> nodes;
  Digraph graph;
};

DisambGraph build_disamb_graph(const std::vector<std::vector<Candidate>>& mention_candidates,
                               const EntityLinkIndex& index);

// DOT output for inspection; node label carries the entity and mention index.
void write_dot(const DisambGraph& g, std::ostream& out, std::string_view name);

}  // namespace centilink
