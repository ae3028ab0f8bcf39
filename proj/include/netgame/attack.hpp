#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace netgame {

enum class AttackKind { vertex_order, centrality, edge_degree_product, random_node };

std::string_view to_string(AttackKind kind);
std::optional<AttackKind> parse_attack_kind(std::string_view text);

struct AttackSpec {
  AttackKind kind = AttackKind::vertex_order;
  std::size_t budget = 10;  ///< nodes (or edges) destroyed per round
};

/// What one attack phase destroyed. Exactly one of the lists is used,
/// depending on whether the strategy targets nodes or edges.
struct AttackOutcome {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;

  friend bool operator==(const AttackOutcome&, const AttackOutcome&) = default;
};

// All selectors rank against the current topology without modifying it and
// return min(r, available) distinct targets, highest rank first. Candidates
// tied with the last admitted score are sampled uniformly using `rng`.

std::vector<NodeId> select_vertex_order_targets(const Graph& g, std::size_t r, Rng& rng);
std::vector<NodeId> select_centrality_targets(const Graph& g, std::size_t r, Rng& rng);
/// Edges ranked by degree(u) * degree(v).
std::vector<Edge> select_edge_targets(const Graph& g, std::size_t r, Rng& rng);
std::vector<NodeId> select_random_targets(const Graph& g, std::size_t r, Rng& rng);

/// Selects every target against the round-start topology, then removes them.
AttackOutcome execute_attack(Graph& g, const AttackSpec& spec, Rng& rng);

}  // namespace netgame
