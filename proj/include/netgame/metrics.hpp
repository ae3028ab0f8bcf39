#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

/// Connected components, each sorted ascending and ordered by smallest member.
struct ComponentPartition {
  std::vector<std::vector<NodeId>> components;
  std::size_t largest_size = 0;

  /// Component sizes in descending order.
  std::vector<std::size_t> sizes_descending() const;
};

/// Betweenness score per node. Unnormalized; each unordered source/target
/// pair contributes at most 1 and endpoints are excluded.
using CentralityMap = std::map<NodeId, double>;

ComponentPartition connected_components(const Graph& g);

std::size_t largest_component_size(const Graph& g);

/// Brandes dependency accumulation over unweighted BFS, O(VE).
CentralityMap betweenness_centrality(const Graph& g);

/// Number of unordered node pairs at each hop distance: result[d] for d >= 1
/// (result[0] is always 0). Disconnected pairs are not counted.
std::vector<std::size_t> distance_histogram(const Graph& g);

/// Mean of 1/d(u,v) over all n(n-1)/2 unordered pairs, with 0 for pairs in
/// different components. Throws std::invalid_argument for fewer than 2 nodes.
double average_inverse_geodesic_length(const Graph& g);

/// Shared tail of the metric: sums histogram[d]/d in ascending d, then
/// divides by the pair count of an n-node graph.
double inverse_geodesic_mean(const std::vector<std::size_t>& histogram, std::size_t n);

}  // namespace netgame
