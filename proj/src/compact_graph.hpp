#pragma once

#include <cstdint>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame::detail {

// Dense-index snapshot of a Graph for traversal-heavy algorithms. Index i
// corresponds to ids[i]; ids are ascending, so index order is id order.
struct CompactGraph {
  std::vector<NodeId> ids;
  std::vector<std::uint32_t> offsets;  // size n+1
  std::vector<std::uint32_t> targets;

  explicit CompactGraph(const Graph& g);

  std::size_t size() const { return ids.size(); }
  const std::uint32_t* begin(std::size_t i) const { return targets.data() + offsets[i]; }
  const std::uint32_t* end(std::size_t i) const { return targets.data() + offsets[i + 1]; }
};

}  // namespace netgame::detail
