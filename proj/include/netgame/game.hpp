#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "netgame/attack.hpp"
#include "netgame/defense.hpp"
#include "netgame/generators.hpp"
#include "netgame/graph.hpp"

namespace netgame {

struct GameConfig {
  BAParams generator;
  AttackSpec attack;
  DefenseSpec defense;
  std::size_t rounds = 30;
  std::uint64_t seed = 1;
  /// The network counts as disrupted once its LCC drops below this fraction
  /// of the initial population.
  double disruption_fraction = 0.5;
  /// Smallest component size that counts as non-trivial for partitioning.
  std::size_t min_component = 2;
};

/// Throws std::invalid_argument describing the first invalid field.
void validate(const GameConfig& config);

struct RoundRecord {
  std::size_t round = 0;  ///< 0 is the state after initial adaptation
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t lcc_size = 0;
  std::size_t second_component_size = 0;
  std::size_t component_count = 0;
  double aigl = 0.0;  ///< 0 when fewer than two nodes remain
  AttackOutcome destroyed;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct GameTrace {
  GameConfig config;
  std::vector<RoundRecord> records;
  std::optional<std::size_t> disruption_round;
};

enum class GamePhase { immunized, initial_adaptation, attacked, replenished, adapted };

/// Observer invoked after each phase with the round index (0 for phases
/// before the first attack).
using PhaseHook =
    std::function<void(GamePhase, std::size_t round, const Graph&, const GroupRegistry&)>;

/// Plays one game: generate, immunize, initial adaptation, then `rounds`
/// rounds of attack, replenish (one node per destroyed node), adapt. All
/// randomness comes from one generator seeded with config.seed and is drawn
/// in that phase order.
GameTrace run_game(const GameConfig& config, const PhaseHook& hook = {});

/// True iff at least two components have min_component or more nodes.
bool is_partitioned(const Graph& g, std::size_t min_component);

/// First round whose second-largest component has at least min_component
/// nodes.
std::optional<std::size_t> first_partition_round(const GameTrace& trace,
                                                 std::size_t min_component);

/// Mean LCC over the final `window` records (fewer if the trace is shorter).
double equilibrium_lcc(const GameTrace& trace, std::size_t window = 5);
double equilibrium_aigl(const GameTrace& trace, std::size_t window = 5);

}  // namespace netgame
