#include "netgame/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "compact_graph.hpp"

namespace netgame {

namespace detail {

CompactGraph::CompactGraph(const Graph& g) {
  ids = g.nodes();
  std::map<NodeId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace_hint(index.end(), ids[i], i);
  offsets.reserve(ids.size() + 1);
  targets.reserve(2 * g.edge_count());
  offsets.push_back(0);
  for (NodeId id : ids) {
    for (NodeId w : g.neighbors(id)) targets.push_back(index.at(w));
    offsets.push_back(static_cast<std::uint32_t>(targets.size()));
  }
}

}  // namespace detail

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<std::size_t> ComponentPartition::sizes_descending() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(components.size());
  for (const auto& c : components) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

ComponentPartition connected_components(const Graph& g) {
  const detail::CompactGraph cg(g);
  const std::size_t n = cg.size();
  ComponentPartition out;
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  // Scanning roots in ascending index order yields components ordered by
  // their smallest id.
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    queue.clear();
    queue.push_back(root);
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto* w = cg.begin(queue[head]); w != cg.end(queue[head]); ++w) {
        if (!seen[*w]) {
          seen[*w] = true;
          queue.push_back(*w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<NodeId> members;
    members.reserve(queue.size());
    for (auto i : queue) members.push_back(cg.ids[i]);
    out.largest_size = std::max(out.largest_size, members.size());
    out.components.push_back(std::move(members));
  }
  return out;
}

std::size_t largest_component_size(const Graph& g) {
  return connected_components(g).largest_size;
}

CentralityMap betweenness_centrality(const Graph& g) {
  const detail::CompactGraph cg(g);
  const std::size_t n = cg.size();
  std::vector<double> score(n, 0.0);

  std::vector<std::uint32_t> order;  // BFS visitation order (the stack)
  std::vector<std::uint32_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  order.reserve(n);

  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::uint32_t v = order[head];
      for (auto* w = cg.begin(v); w != cg.end(v); ++w) {
        if (dist[*w] == kUnreached) {
          dist[*w] = dist[v] + 1;
          order.push_back(*w);
        }
        if (dist[*w] == dist[v] + 1) sigma[*w] += sigma[v];
      }
    }
    // Predecessors of w are exactly the neighbours one hop closer to s, so
    // they are recovered from dist instead of being stored.
    for (std::size_t i = order.size(); i-- > 1;) {
      const std::uint32_t w = order[i];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (auto* v = cg.begin(w); v != cg.end(w); ++v) {
        if (dist[*v] + 1 == dist[w]) delta[*v] += sigma[*v] * coeff;
      }
      score[w] += delta[w];
    }
  }

  CentralityMap out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_hint(out.end(), cg.ids[i], score[i] / 2.0);
  return out;
}

std::vector<std::size_t> distance_histogram(const Graph& g) {
  const detail::CompactGraph cg(g);
  const std::size_t n = cg.size();
  std::vector<std::size_t> ordered_counts(1, 0);
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t v = queue[head];
      for (auto* w = cg.begin(v); w != cg.end(v); ++w) {
        if (dist[*w] != kUnreached) continue;
        dist[*w] = dist[v] + 1;
        if (dist[*w] >= ordered_counts.size()) ordered_counts.resize(dist[*w] + 1, 0);
        ++ordered_counts[dist[*w]];
        queue.push_back(*w);
      }
    }
  }
  // Every unordered pair was reached once from each end.
  for (auto& c : ordered_counts) c /= 2;
  return ordered_counts;
}

double inverse_geodesic_mean(const std::vector<std::size_t>& histogram, std::size_t n) {
  if (n < 2) throw std::invalid_argument("inverse geodesic mean needs at least 2 nodes");
  double sum = 0.0;
  for (std::size_t d = 1; d < histogram.size(); ++d) {
    sum += static_cast<double>(histogram[d]) / static_cast<double>(d);
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return sum / pairs;
}

double average_inverse_geodesic_length(const Graph& g) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("average inverse geodesic length needs at least 2 nodes");
  }
  return inverse_geodesic_mean(distance_histogram(g), g.node_count());
}

}  // namespace netgame
