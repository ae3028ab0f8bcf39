#include "netgame/defense.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "netgame/metrics.hpp"

namespace netgame {

std::string_view to_string(ReplenishKind kind) {
  switch (kind) {
    case ReplenishKind::none: return "none";
    case ReplenishKind::random: return "random";
    case ReplenishKind::scale_free: return "scale_free";
  }
  return "?";
}

std::string_view to_string(AdaptKind kind) {
  switch (kind) {
    case AdaptKind::none: return "none";
    case AdaptKind::ring: return "ring";
    case AdaptKind::clique: return "clique";
    case AdaptKind::delegate: return "delegate";
    case AdaptKind::delegate_then_clique: return "delegate_then_clique";
  }
  return "?";
}

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::ring ? "ring" : "clique";
}

std::optional<ReplenishKind> parse_replenish_kind(std::string_view text) {
  for (auto k : {ReplenishKind::none, ReplenishKind::random, ReplenishKind::scale_free}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::optional<AdaptKind> parse_adapt_kind(std::string_view text) {
  for (auto k : {AdaptKind::none, AdaptKind::ring, AdaptKind::clique, AdaptKind::delegate,
                 AdaptKind::delegate_then_clique}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

void validate(const DefenseSpec& spec) {
  if (spec.group_size < 3) throw std::invalid_argument("group_size must be at least 3");
  if (spec.vuln_threshold && !(*spec.vuln_threshold >= 1.0)) {
    throw std::invalid_argument("vulnerability threshold must be at least 1");
  }
  if (spec.target_mean_degree_k && !(*spec.target_mean_degree_k > 0.0)) {
    throw std::invalid_argument("k must be positive");
  }
  if (spec.delegation_steps < 1) throw std::invalid_argument("delegation_steps must be at least 1");
}

double vulnerability_threshold(const Graph& g, const DefenseSpec& spec) {
  return spec.vuln_threshold ? *spec.vuln_threshold : 2.0 * g.mean_degree();
}

// ---------------------------------------------------------------------------
// GroupRegistry

void GroupRegistry::add(GroupKind kind, std::vector<NodeId> members) {
  for (NodeId v : members) {
    if (members_.contains(v)) {
      throw std::invalid_argument("node " + std::to_string(v.value) + " already in a group");
    }
  }
  members_.insert(members.begin(), members.end());
  groups_.push_back({kind, std::move(members)});
}

void GroupRegistry::prune(const Graph& g) {
  std::vector<Group> kept;
  members_.clear();
  for (auto& group : groups_) {
    std::erase_if(group.members, [&](NodeId v) { return !g.contains(v); });
    if (group.members.size() < 2) continue;
    members_.insert(group.members.begin(), group.members.end());
    kept.push_back(std::move(group));
  }
  groups_ = std::move(kept);
}

bool GroupRegistry::disjoint() const {
  std::set<NodeId> seen;
  for (const auto& group : groups_) {
    for (NodeId v : group.members) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Replenishment

namespace {

// Component of a uniformly drawn node, i.e. a component drawn with
// probability proportional to its size.
const std::vector<NodeId>& draw_component(const ComponentPartition& parts, std::size_t n,
                                          Rng& rng) {
  std::size_t pick = rng.uniform_index(n);
  for (const auto& c : parts.components) {
    if (pick < c.size()) return c;
    pick -= c.size();
  }
  return parts.components.back();
}

}  // namespace

std::vector<NodeId> replenish_random(Graph& g, std::size_t count, double k, Rng& rng) {
  if (!(k > 0.0)) throw std::invalid_argument("replenish_random: k must be positive");
  std::vector<NodeId> fresh;
  fresh.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (g.empty()) {
      fresh.push_back(g.add_node());
      continue;
    }
    const std::size_t population = g.node_count();
    const ComponentPartition parts = connected_components(g);
    const std::vector<NodeId>& home = draw_component(parts, population, rng);
    const double p = std::min(1.0, k / static_cast<double>(population));

    const NodeId v = g.add_node();
    for (NodeId u : home) {
      if (rng.bernoulli(p)) g.add_edge(v, u);
    }
    if (g.degree(v) == 0) g.add_edge(v, home[rng.uniform_index(home.size())]);
    fresh.push_back(v);
  }
  return fresh;
}

std::vector<NodeId> replenish_scale_free(Graph& g, std::size_t count, std::size_t edges_per_node,
                                         Rng& rng) {
  if (edges_per_node < 1) throw std::invalid_argument("replenish_scale_free: edges_per_node < 1");
  std::vector<NodeId> fresh;
  fresh.reserve(count);
  if (g.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      const NodeId v = g.add_node();
      if (!fresh.empty()) g.add_edge(fresh.back(), v);
      fresh.push_back(v);
    }
    return fresh;
  }

  std::vector<NodeId> endpoints;
  std::vector<NodeId> targets;
  for (std::size_t i = 0; i < count; ++i) {
    const ComponentPartition parts = connected_components(g);
    const std::vector<NodeId>& home = draw_component(parts, g.node_count(), rng);
    const std::size_t wanted = std::min(edges_per_node, home.size());

    targets.clear();
    if (home.size() == 1) {
      targets.push_back(home.front());
    } else {
      // Members of a non-trivial component all have degree >= 1.
      endpoints.clear();
      for (NodeId u : home) endpoints.insert(endpoints.end(), g.degree(u), u);
      while (targets.size() < wanted) {
        const NodeId t = endpoints[rng.uniform_index(endpoints.size())];
        if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
      }
    }
    const NodeId v = g.add_node();
    for (NodeId t : targets) g.add_edge(v, t);
    fresh.push_back(v);
  }
  return fresh;
}

// ---------------------------------------------------------------------------
// Adaptation

namespace {

std::set<NodeId> component_of(const Graph& g, NodeId root) {
  std::set<NodeId> seen{root};
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

// Orders nodes by degree (descending or ascending) with ties in random order.
void sort_by_degree(const Graph& g, std::vector<NodeId>& nodes, bool descending, Rng& rng) {
  rng.shuffle(std::span<NodeId>(nodes));
  std::stable_sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
    return descending ? g.degree(a) > g.degree(b) : g.degree(a) < g.degree(b);
  });
}

void wire_members(Graph& g, const std::vector<NodeId>& members, GroupKind kind) {
  const std::size_t n = members.size();
  if (kind == GroupKind::ring) {
    for (std::size_t i = 0; i < n; ++i) g.add_edge(members[i], members[(i + 1) % n]);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(members[i], members[j]);
    }
  }
}

void form_groups(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                 std::span<const NodeId> fresh, GroupKind kind, Rng& rng) {
  reg.prune(g);
  const double threshold = vulnerability_threshold(g, spec);
  const std::size_t needed = spec.group_size - 1;
  const auto vulnerable = [&](NodeId v) {
    return g.contains(v) && !reg.contains(v) && static_cast<double>(g.degree(v)) > threshold;
  };

  std::vector<NodeId> founders;
  for (const auto& [id, nbrs] : g) {
    if (vulnerable(id)) founders.push_back(id);
  }
  sort_by_degree(g, founders, /*descending=*/true, rng);

  std::vector<NodeId> pool;
  for (NodeId v : fresh) {
    if (g.contains(v) && !reg.contains(v)) pool.push_back(v);
  }

  for (NodeId founder : founders) {
    // Earlier splits in this phase may have changed the founder's degree.
    if (!vulnerable(founder)) continue;

    const std::set<NodeId> home = component_of(g, founder);
    std::vector<NodeId> recruits;
    for (NodeId v : pool) {
      if (recruits.size() == needed) break;
      if (v != founder && !reg.contains(v) && home.contains(v)) recruits.push_back(v);
    }
    if (recruits.size() < needed) {
      std::vector<NodeId> local;
      for (NodeId w : g.neighbors(founder)) {
        if (!reg.contains(w) && std::find(recruits.begin(), recruits.end(), w) == recruits.end()) {
          local.push_back(w);
        }
      }
      sort_by_degree(g, local, /*descending=*/false, rng);
      for (NodeId w : local) {
        if (recruits.size() == needed) break;
        recruits.push_back(w);
      }
    }
    if (recruits.size() < needed) continue;

    const std::set<NodeId> recruit_set(recruits.begin(), recruits.end());
    std::vector<NodeId> external;
    for (NodeId w : g.neighbors(founder)) {
      if (!recruit_set.contains(w)) external.push_back(w);
    }

    if (spec.require_external_share && external.size() < spec.group_size) continue;

    for (NodeId r : recruits) {
      const std::vector<NodeId> links(g.neighbors(r).begin(), g.neighbors(r).end());
      for (NodeId w : links) g.remove_edge(r, w);
    }

    std::vector<NodeId> members;
    members.reserve(spec.group_size);
    members.push_back(founder);
    members.insert(members.end(), recruits.begin(), recruits.end());

    rng.shuffle(std::span<NodeId>(external));
    for (std::size_t i = 0; i < external.size(); ++i) {
      const NodeId holder = members[i % members.size()];
      if (holder == founder) continue;
      g.remove_edge(founder, external[i]);
      g.add_edge(holder, external[i]);
    }
    wire_members(g, members, kind);

    std::erase_if(pool, [&](NodeId v) { return recruit_set.contains(v); });
    reg.add(kind, std::move(members));
  }
}

}  // namespace

void adapt_rings(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                 std::span<const NodeId> fresh, Rng& rng) {
  form_groups(g, reg, spec, fresh, GroupKind::ring, rng);
}

void adapt_cliques(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                   std::span<const NodeId> fresh, Rng& rng) {
  form_groups(g, reg, spec, fresh, GroupKind::clique, rng);
}

void adapt_delegate(Graph& g, const DefenseSpec& spec, Rng& rng) {
  const double threshold = vulnerability_threshold(g, spec);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId v : g.nodes()) {
    for (std::size_t step = 0; step < spec.delegation_steps; ++step) {
      if (!(static_cast<double>(g.degree(v)) > threshold)) break;
      const std::vector<NodeId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
      pairs.clear();
      for (NodeId a : nbrs) {
        for (NodeId b : nbrs) {
          if (a != b && !g.has_edge(a, b)) pairs.emplace_back(a, b);
        }
      }
      if (pairs.empty()) break;
      const auto [deputy, other] = pairs[rng.uniform_index(pairs.size())];
      g.add_edge(deputy, other);
      g.remove_edge(v, other);
    }
  }
}

void adapt_delegate_then_clique(Graph& g, GroupRegistry& reg, const DefenseSpec& spec,
                                std::span<const NodeId> fresh, Rng& rng) {
  adapt_delegate(g, spec, rng);
  adapt_cliques(g, reg, spec, fresh, rng);
}

}  // namespace netgame
