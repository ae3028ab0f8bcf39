#include "netgame/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "netgame/metrics.hpp"

namespace netgame {

void validate(const GameConfig& config) {
  validate(config.generator);
  validate(config.defense);
  if (!(config.disruption_fraction > 0.0 && config.disruption_fraction <= 1.0)) {
    throw std::invalid_argument("disruption_fraction must lie in (0, 1]");
  }
  if (config.min_component < 1) throw std::invalid_argument("min_component must be at least 1");
}

namespace {

RoundRecord measure(const Graph& g, std::size_t round) {
  RoundRecord rec;
  rec.round = round;
  rec.node_count = g.node_count();
  rec.edge_count = g.edge_count();
  const auto sizes = connected_components(g).sizes_descending();
  rec.component_count = sizes.size();
  rec.lcc_size = sizes.empty() ? 0 : sizes[0];
  rec.second_component_size = sizes.size() < 2 ? 0 : sizes[1];
  rec.aigl = g.node_count() < 2 ? 0.0 : average_inverse_geodesic_length(g);
  return rec;
}

// Adaptation once hostilities are under way (including the initial phase).
void adapt(AdaptKind kind, Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
           std::span<const NodeId> fresh, Rng& rng) {
  switch (kind) {
    case AdaptKind::none: break;
    case AdaptKind::ring: adapt_rings(g, reg, spec, fresh, rng); break;
    case AdaptKind::clique: adapt_cliques(g, reg, spec, fresh, rng); break;
    case AdaptKind::delegate: adapt_delegate(g, spec, rng); break;
    case AdaptKind::delegate_then_clique:
      adapt_delegate_then_clique(g, reg, spec, fresh, rng);
      break;
  }
}

// Adaptation during the pre-hostility window: delegation-based defenses
// only delegate; the others run their usual step.
void immunize(AdaptKind kind, Graph& g, GroupRegistry& reg, const DefenseSpec& spec, Rng& rng) {
  if (kind == AdaptKind::delegate || kind == AdaptKind::delegate_then_clique) {
    adapt_delegate(g, spec, rng);
  } else {
    adapt(kind, g, reg, spec, {}, rng);
  }
}

}  // namespace

GameTrace run_game(const GameConfig& config, const PhaseHook& hook) {
  validate(config);
  const auto notify = [&](GamePhase phase, std::size_t round, const Graph& g,
                          const GroupRegistry& reg) {
    if (hook) hook(phase, round, g, reg);
  };

  Rng rng(config.seed);
  Graph g = generate_ba(config.generator, rng);
  const std::size_t initial_n = g.node_count();

  DefenseSpec defense = config.defense;
  if (!defense.target_mean_degree_k) defense.target_mean_degree_k = g.mean_degree();
  const AdaptKind adapt_kind = defense.adapt;

  GroupRegistry reg;
  for (std::size_t i = 0; i < defense.immunize_rounds; ++i) {
    immunize(adapt_kind, g, reg, defense, rng);
    notify(GamePhase::immunized, 0, g, reg);
  }
  adapt(adapt_kind, g, reg, defense, {}, rng);
  notify(GamePhase::initial_adaptation, 0, g, reg);

  GameTrace trace;
  trace.config = config;
  trace.records.reserve(config.rounds + 1);
  trace.records.push_back(measure(g, 0));

  for (std::size_t round = 1; round <= config.rounds; ++round) {
    AttackOutcome outcome = execute_attack(g, config.attack, rng);
    notify(GamePhase::attacked, round, g, reg);

    std::vector<NodeId> fresh;
    const std::size_t lost = outcome.nodes.size();
    switch (defense.replenish) {
      case ReplenishKind::none: break;
      case ReplenishKind::random:
        fresh = replenish_random(g, lost, *defense.target_mean_degree_k, rng);
        break;
      case ReplenishKind::scale_free:
        fresh = replenish_scale_free(g, lost, config.generator.edges_per_node, rng);
        break;
    }
    notify(GamePhase::replenished, round, g, reg);

    adapt(adapt_kind, g, reg, defense, fresh, rng);
    notify(GamePhase::adapted, round, g, reg);

    RoundRecord rec = measure(g, round);
    rec.destroyed = std::move(outcome);
    trace.records.push_back(std::move(rec));
  }

  const double cutoff = config.disruption_fraction * static_cast<double>(initial_n);
  for (const auto& rec : trace.records) {
    if (static_cast<double>(rec.lcc_size) < cutoff) {
      trace.disruption_round = rec.round;
      break;
    }
  }
  return trace;
}

bool is_partitioned(const Graph& g, std::size_t min_component) {
  const auto parts = connected_components(g);
  const auto big = std::count_if(parts.components.begin(), parts.components.end(),
                                 [&](const auto& c) { return c.size() >= min_component; });
  return big >= 2;
}

std::optional<std::size_t> first_partition_round(const GameTrace& trace,
                                                 std::size_t min_component) {
  for (const auto& rec : trace.records) {
    if (rec.second_component_size >= min_component) return rec.round;
  }
  return std::nullopt;
}

namespace {

template <typename Field>
double tail_mean(const GameTrace& trace, std::size_t window, Field field) {
  const auto& recs = trace.records;
  if (recs.empty()) return 0.0;
  const std::size_t take = std::clamp<std::size_t>(window, 1, recs.size());
  double sum = 0.0;
  for (std::size_t i = recs.size() - take; i < recs.size(); ++i) sum += field(recs[i]);
  return sum / static_cast<double>(take);
}

}  // namespace

double equilibrium_lcc(const GameTrace& trace, std::size_t window) {
  return tail_mean(trace, window, [](const RoundRecord& r) { return double(r.lcc_size); });
}

double equilibrium_aigl(const GameTrace& trace, std::size_t window) {
  return tail_mean(trace, window, [](const RoundRecord& r) { return r.aigl; });
}

}  // namespace netgame
