#pragma once

#include <cstddef>
#include <stdexcept>

#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace netgame {

/// Barabasi-Albert growth parameters.
struct BAParams {
  std::size_t m0 = 40;              ///< seed nodes, wired as a ring
  std::size_t m = 10;               ///< nodes per growth round
  std::size_t edges_per_node = 3;   ///< edges each newcomer creates
  std::size_t target_n = 400;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ParameterError unless 3 <= m0, 1 <= edges_per_node <= m0,
/// m >= 1 and target_n >= m0.
void validate(const BAParams& params);

/// Ring seed over m0 nodes, then one newcomer at a time attaching to
/// edges_per_node distinct existing nodes with probability proportional to
/// current degree. Degrees are updated after every insertion, so `m` only
/// groups insertions into rounds and does not change the outcome.
Graph generate_ba(const BAParams& params, Rng& rng);

}  // namespace netgame
