#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace netgame {

/// Node identity within one game. Ids are handed out monotonically and a
/// destroyed node's id is never reused.
struct NodeId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

std::ostream& operator<<(std::ostream& os, NodeId id);

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  static Edge make(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrc {
  self_loop,
  unknown_node,
  missing_edge,
  duplicate_node,
  corrupted,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Undirected simple graph keyed by NodeId.
///
/// Iteration over nodes and neighbour sets is always in ascending id order,
/// which is what makes seeded runs reproducible. A Graph has a single writer;
/// copies are independent values and can move between threads freely.
class Graph {
 public:
  using NeighborSet = std::set<NodeId>;

  NodeId add_node();

  /// Inserts a node with a caller-chosen id (used by importers). Later
  /// add_node() calls hand out ids above every id seen so far.
  void insert_node(NodeId id);

  /// Idempotent. Throws GraphError{self_loop | unknown_node}.
  void add_edge(NodeId a, NodeId b);

  /// Throws GraphError{unknown_node}.
  void remove_node(NodeId v);

  /// Throws GraphError{missing_edge} (also for unknown endpoints).
  void remove_edge(NodeId a, NodeId b);

  bool contains(NodeId v) const { return adjacency_.contains(v); }
  bool has_edge(NodeId a, NodeId b) const;

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  const NeighborSet& neighbors(NodeId v) const;

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  double mean_degree() const;

  /// Nodes in ascending id order.
  std::vector<NodeId> nodes() const;
  /// Edges sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Id the next add_node() will return.
  NodeId next_id() const { return NodeId{next_id_}; }

  /// Full structural check: symmetry, no self-loops, closed adjacency and a
  /// consistent edge counter. Throws GraphError{corrupted} on violation.
  void audit() const;

  auto begin() const { return adjacency_.begin(); }
  auto end() const { return adjacency_.end(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<NodeId, NeighborSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::uint64_t next_id_ = 0;
};

}  // namespace netgame
