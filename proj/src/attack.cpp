#include "netgame/attack.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "netgame/metrics.hpp"

namespace netgame {

namespace {

template <typename T>
struct Scored {
  T item;
  double score;
};

// Takes the r best items. Items whose score is within `tolerance` of the
// r-th best score form the boundary tie group; the seats left after the
// strictly better items are filled from it uniformly at random.
template <typename T>
std::vector<T> take_top(std::vector<Scored<T>> scored, std::size_t r, double tolerance,
                        Rng& rng) {
  r = std::min(r, scored.size());
  std::vector<T> out;
  if (r == 0) return out;
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.score > b.score; });

  const double boundary = scored[r - 1].score;
  const auto tied = [&](const Scored<T>& s) { return std::abs(s.score - boundary) <= tolerance; };
  std::size_t first_tied = r - 1;
  while (first_tied > 0 && tied(scored[first_tied - 1])) --first_tied;
  std::size_t end_tied = r;
  while (end_tied < scored.size() && tied(scored[end_tied])) ++end_tied;

  out.reserve(r);
  for (std::size_t i = 0; i < first_tied; ++i) out.push_back(scored[i].item);
  std::vector<T> pool;
  for (std::size_t i = first_tied; i < end_tied; ++i) pool.push_back(scored[i].item);
  const std::size_t seats = r - first_tied;
  rng.choose_front(std::span<T>(pool), seats);
  out.insert(out.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(seats));
  return out;
}

}  // namespace

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::vertex_order: return "vertex_order";
    case AttackKind::centrality: return "centrality";
    case AttackKind::edge_degree_product: return "edge_degree_product";
    case AttackKind::random_node: return "random_node";
  }
  return "?";
}

std::optional<AttackKind> parse_attack_kind(std::string_view text) {
  for (auto k : {AttackKind::vertex_order, AttackKind::centrality,
                 AttackKind::edge_degree_product, AttackKind::random_node}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::vector<NodeId> select_vertex_order_targets(const Graph& g, std::size_t r, Rng& rng) {
  std::vector<Scored<NodeId>> scored;
  scored.reserve(g.node_count());
  for (const auto& [id, nbrs] : g) scored.push_back({id, static_cast<double>(nbrs.size())});
  return take_top(std::move(scored), r, 0.0, rng);
}

std::vector<NodeId> select_centrality_targets(const Graph& g, std::size_t r, Rng& rng) {
  if (r == 0) return {};
  const CentralityMap centrality = betweenness_centrality(g);
  std::vector<Scored<NodeId>> scored;
  scored.reserve(centrality.size());
  double top = 0.0;
  for (const auto& [id, score] : centrality) {
    scored.push_back({id, score});
    top = std::max(top, score);
  }
  // Symmetric nodes can differ in the last bits depending on accumulation
  // order; treat such scores as equal.
  return take_top(std::move(scored), r, 1e-9 * std::max(1.0, top), rng);
}

std::vector<Edge> select_edge_targets(const Graph& g, std::size_t r, Rng& rng) {
  std::vector<Scored<Edge>> scored;
  scored.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    scored.push_back({e, static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v))});
  }
  return take_top(std::move(scored), r, 0.0, rng);
}

std::vector<NodeId> select_random_targets(const Graph& g, std::size_t r, Rng& rng) {
  std::vector<NodeId> nodes = g.nodes();
  r = std::min(r, nodes.size());
  rng.choose_front(std::span<NodeId>(nodes), r);
  nodes.resize(r);
  return nodes;
}

AttackOutcome execute_attack(Graph& g, const AttackSpec& spec, Rng& rng) {
  AttackOutcome out;
  switch (spec.kind) {
    case AttackKind::vertex_order:
      out.nodes = select_vertex_order_targets(g, spec.budget, rng);
      break;
    case AttackKind::centrality:
      out.nodes = select_centrality_targets(g, spec.budget, rng);
      break;
    case AttackKind::random_node:
      out.nodes = select_random_targets(g, spec.budget, rng);
      break;
    case AttackKind::edge_degree_product:
      out.edges = select_edge_targets(g, spec.budget, rng);
      break;
  }
  for (NodeId v : out.nodes) g.remove_node(v);
  for (const Edge& e : out.edges) g.remove_edge(e.u, e.v);
  return out;
}

}  // namespace netgame
