#include "netgame/graph.hpp"

#include <sstream>

namespace netgame {

namespace {

std::string describe(NodeId id) { return std::to_string(id.value); }

}  // namespace

std::ostream& operator<<(std::ostream& os, NodeId id) { return os << id.value; }

NodeId Graph::add_node() {
  NodeId id{next_id_++};
  adjacency_.emplace(id, NeighborSet{});
  return id;
}

void Graph::insert_node(NodeId id) {
  if (!adjacency_.emplace(id, NeighborSet{}).second) {
    throw GraphError(GraphErrc::duplicate_node, "node " + describe(id) + " already present");
  }
  if (id.value >= next_id_) next_id_ = id.value + 1;
}

void Graph::add_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw GraphError(GraphErrc::self_loop, "self-loop on node " + describe(a));
  }
  auto ia = adjacency_.find(a);
  auto ib = adjacency_.find(b);
  if (ia == adjacency_.end() || ib == adjacency_.end()) {
    throw GraphError(GraphErrc::unknown_node,
                     "edge endpoint not in graph: " + describe(ia == adjacency_.end() ? a : b));
  }
  if (ia->second.insert(b).second) {
    ib->second.insert(a);
    ++edge_count_;
  }
}

void Graph::remove_node(NodeId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw GraphError(GraphErrc::unknown_node, "cannot remove unknown node " + describe(v));
  }
  for (NodeId w : it->second) adjacency_.at(w).erase(v);
  edge_count_ -= it->second.size();
  adjacency_.erase(it);
}

void Graph::remove_edge(NodeId a, NodeId b) {
  if (!has_edge(a, b)) {
    throw GraphError(GraphErrc::missing_edge,
                     "no edge " + describe(a) + "-" + describe(b));
  }
  adjacency_.at(a).erase(b);
  adjacency_.at(b).erase(a);
  --edge_count_;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.contains(b);
}

const Graph::NeighborSet& Graph::neighbors(NodeId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw GraphError(GraphErrc::unknown_node, "unknown node " + describe(v));
  }
  return it->second;
}

double Graph::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(adjacency_.size());
  for (const auto& [id, _] : adjacency_) out.push_back(id);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [id, nbrs] : adjacency_) {
    for (auto it = nbrs.upper_bound(id); it != nbrs.end(); ++it) out.push_back({id, *it});
  }
  return out;
}

void Graph::audit() const {
  std::size_t endpoint_total = 0;
  for (const auto& [id, nbrs] : adjacency_) {
    if (id.value >= next_id_) {
      throw GraphError(GraphErrc::corrupted, "node id " + describe(id) + " above id counter");
    }
    for (NodeId w : nbrs) {
      if (w == id) throw GraphError(GraphErrc::corrupted, "self-loop at " + describe(id));
      auto it = adjacency_.find(w);
      if (it == adjacency_.end()) {
        throw GraphError(GraphErrc::corrupted,
                         "dangling neighbour " + describe(w) + " of " + describe(id));
      }
      if (!it->second.contains(id)) {
        throw GraphError(GraphErrc::corrupted,
                         "asymmetric edge " + describe(id) + "-" + describe(w));
      }
    }
    endpoint_total += nbrs.size();
  }
  if (endpoint_total != 2 * edge_count_) {
    std::ostringstream msg;
    msg << "edge counter " << edge_count_ << " disagrees with " << endpoint_total
        << " adjacency endpoints";
    throw GraphError(GraphErrc::corrupted, msg.str());
  }
}

}  // namespace netgame
