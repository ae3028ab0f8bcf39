#include "netgame/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace netgame {

void validate(const BAParams& p) {
  if (p.m0 < 3) throw ParameterError("m0 must be at least 3 to form the seed ring");
  if (p.edges_per_node < 1) throw ParameterError("edges_per_node must be at least 1");
  if (p.edges_per_node > p.m0) {
    throw ParameterError("edges_per_node (" + std::to_string(p.edges_per_node) +
                         ") exceeds m0 (" + std::to_string(p.m0) + ")");
  }
  if (p.m < 1) throw ParameterError("m must be at least 1");
  if (p.target_n < p.m0) throw ParameterError("target_n must be at least m0");
}

Graph generate_ba(const BAParams& params, Rng& rng) {
  validate(params);
  Graph g;
  std::vector<NodeId> seed;
  for (std::size_t i = 0; i < params.m0; ++i) seed.push_back(g.add_node());
  for (std::size_t i = 0; i < params.m0; ++i) g.add_edge(seed[i], seed[(i + 1) % params.m0]);

  // Each node appears once per incident edge, so a uniform draw from this
  // list is a draw proportional to degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (params.m0 + params.edges_per_node * (params.target_n - params.m0)));
  for (const Edge& e : g.edges()) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }

  std::vector<NodeId> targets;
  while (g.node_count() < params.target_n) {
    targets.clear();
    while (targets.size() < params.edges_per_node) {
      const NodeId t = endpoints[rng.uniform_index(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    const NodeId v = g.add_node();
    for (NodeId t : targets) {
      g.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

}  // namespace netgame
