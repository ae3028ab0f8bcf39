#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace netgame {

enum class ReplenishKind { none, random, scale_free };
enum class AdaptKind { none, ring, clique, delegate, delegate_then_clique };
enum class GroupKind { ring, clique };

std::string_view to_string(ReplenishKind kind);
std::string_view to_string(AdaptKind kind);
std::string_view to_string(GroupKind kind);
std::optional<ReplenishKind> parse_replenish_kind(std::string_view text);
std::optional<AdaptKind> parse_adapt_kind(std::string_view text);

struct DefenseSpec {
  ReplenishKind replenish = ReplenishKind::random;
  AdaptKind adapt = AdaptKind::none;
  std::size_t group_size = 10;
  /// A node is vulnerable when its degree is strictly above this value.
  /// Unset means twice the mean degree at the start of each adaptation phase.
  std::optional<double> vuln_threshold;
  /// Expected degree of a randomly replenished node. Unset means the mean
  /// degree of the freshly generated network.
  std::optional<double> target_mean_degree_k;
  std::size_t delegation_steps = 1;
  /// Delegation-only rounds played before the first attack.
  std::size_t immunize_rounds = 0;
  /// Skip founders with fewer external links than group members, so that
  /// every member inherits at least one.
  bool require_external_share = false;
};

/// Throws std::invalid_argument if group_size < 3, a set threshold is below
/// 1, a set k is not positive, or delegation_steps < 1.
void validate(const DefenseSpec& spec);

double vulnerability_threshold(const Graph& g, const DefenseSpec& spec);

struct Group {
  GroupKind kind;
  std::vector<NodeId> members;  ///< founder first
};

/// Ring and clique memberships. Groups never share members.
class GroupRegistry {
 public:
  /// Throws std::invalid_argument if any member already belongs to a group.
  void add(GroupKind kind, std::vector<NodeId> members);

  bool contains(NodeId v) const { return members_.contains(v); }

  /// Drops destroyed members. A group left with fewer than two live
  /// members is dissolved and its survivor becomes free again.
  void prune(const Graph& g);

  const std::vector<Group>& groups() const { return groups_; }
  std::size_t member_count() const { return members_.size(); }

  /// Recomputes disjointness from scratch.
  bool disjoint() const;

 private:
  std::vector<Group> groups_;
  std::set<NodeId> members_;
};

// Replenishment. Each new node is assigned to one existing component, chosen
// with probability proportional to its size, and is only wired inside it.

/// The i-th new node joins each member of its component with probability
/// k / |V|, |V| counted just before it is added. A node that draws no edge
/// is linked to one uniform member of the component.
std::vector<NodeId> replenish_random(Graph& g, std::size_t count, double k, Rng& rng);

/// Each new node attaches preferentially (by degree) to edges_per_node
/// distinct members of its component, or to all of them if fewer. On an
/// empty graph the new nodes are chained.
std::vector<NodeId> replenish_scale_free(Graph& g, std::size_t count,
                                         std::size_t edges_per_node, Rng& rng);

// Adaptation.

/// Splits every vulnerable node that is not already in a group into a ring
/// of group_size members. Recruits come from `fresh` (same component only),
/// then from the founder's lowest-degree free neighbours; recruits drop all
/// their links and the founder's external links are dealt round-robin over
/// the members. Founders without enough recruits are skipped, as are
/// founders with fewer external links than members when
/// require_external_share is set.
void adapt_rings(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                 std::span<const NodeId> fresh, Rng& rng);

/// As adapt_rings, but members are wired as a complete graph.
void adapt_cliques(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                   std::span<const NodeId> fresh, Rng& rng);

/// Every vulnerable node performs up to delegation_steps rewires: for a
/// uniformly chosen pair of non-adjacent neighbours (deputy a, other b), add
/// a-b and drop v-b.
void adapt_delegate(Graph& g, const DefenseSpec& spec, Rng& rng);

/// Delegation followed by clique formation (the hostilities-phase step of the
/// compound defense).
void adapt_delegate_then_clique(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                                std::span<const NodeId> fresh, Rng& rng);

}  // namespace netgame
