#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "netgame/defense.hpp"
#include "netgame/generators.hpp"
#include "netgame/metrics.hpp"
#include "oracles.hpp"

using namespace netgame;

namespace {

NodeId id(std::uint64_t v) { return NodeId{v}; }

// Founder 0 with `leaves` leaf neighbours, plus `fresh` newcomers hanging off
// the leaves in turn (the output of the last replenishment).
struct Fixture {
  Graph g;
  NodeId founder;
  std::vector<NodeId> leaves;
  std::vector<NodeId> fresh;
};

Fixture hub(std::size_t leaves, std::size_t fresh) {
  Fixture f;
  f.founder = f.g.add_node();
  for (std::size_t i = 0; i < leaves; ++i) {
    f.leaves.push_back(f.g.add_node());
    f.g.add_edge(f.founder, f.leaves.back());
  }
  for (std::size_t i = 0; i < fresh; ++i) {
    f.fresh.push_back(f.g.add_node());
    f.g.add_edge(f.fresh.back(), f.leaves[i % leaves]);
  }
  return f;
}

DefenseSpec spec_with(std::size_t n, double threshold) {
  DefenseSpec s;
  s.group_size = n;
  s.vuln_threshold = threshold;
  return s;
}

std::size_t external_degree(const Graph& g, NodeId v, const std::vector<NodeId>& group) {
  std::size_t n = 0;
  for (NodeId w : g.neighbors(v)) n += std::find(group.begin(), group.end(), w) == group.end();
  return n;
}

std::size_t internal_edges(const Graph& g, const std::vector<NodeId>& group) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) n += g.has_edge(group[i], group[j]);
  }
  return n;
}

}  // namespace

TEST_CASE("defense enums round-trip through their names") {
  for (auto k : {ReplenishKind::none, ReplenishKind::random, ReplenishKind::scale_free}) {
    CHECK(parse_replenish_kind(to_string(k)) == k);
  }
  for (auto k : {AdaptKind::none, AdaptKind::ring, AdaptKind::clique, AdaptKind::delegate,
                 AdaptKind::delegate_then_clique}) {
    CHECK(parse_adapt_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_adapt_kind("rings"));
}

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate(DefenseSpec{}));
  DefenseSpec s;
  s.group_size = 2;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = DefenseSpec{};
  s.target_mean_degree_k = 0.0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = DefenseSpec{};
  s.delegation_steps = 0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("group registry") {
  Graph g = oracle::from_edges(6, {});
  GroupRegistry reg;
  reg.add(GroupKind::ring, {id(0), id(1), id(2)});
  CHECK_THROWS_AS(reg.add(GroupKind::clique, {id(2), id(3)}), std::invalid_argument);
  reg.add(GroupKind::clique, {id(3), id(4)});
  CHECK(reg.member_count() == 5);
  CHECK(reg.disjoint());

  g.remove_node(id(1));
  g.remove_node(id(4));
  reg.prune(g);
  REQUIRE(reg.groups().size() == 1);
  CHECK(reg.groups()[0].members == std::vector<NodeId>{id(0), id(2)});
  CHECK_FALSE(reg.contains(id(3)));
  CHECK(reg.contains(id(0)));
}

TEST_CASE("random replenishment") {
  Rng rng(1);
  SUBCASE("count 0") {
    Graph g = oracle::from_edges(3, {{0, 1}});
    const Graph before = g;
    CHECK(replenish_random(g, 0, 2.0, rng).empty());
    CHECK(g == before);
  }
  SUBCASE("rejects non-positive k") {
    Graph g = oracle::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(replenish_random(g, 1, 0.0, rng), std::invalid_argument);
  }
  SUBCASE("empty graph") {
    Graph g;
    CHECK(replenish_random(g, 3, 2.0, rng).size() == 3);
    CHECK(g.node_count() == 3);
  }
  SUBCASE("mean new-node degree tracks k") {
    Graph base;
    for (int i = 0; i < 401; ++i) {
      const NodeId v = base.add_node();
      if (i > 0) base.add_edge(v, id(static_cast<std::uint64_t>(i - 1)));
    }
    double total = 0.0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
      Graph g = base;
      const auto fresh = replenish_random(g, 1, 4.0, rng);
      total += static_cast<double>(g.degree(fresh.at(0)));
    }
    CHECK(std::abs(total / trials - 4.0) <= 0.3);
  }
  SUBCASE("never joins components") {
    Graph g;
    for (int c = 0; c < 2; ++c) {
      const std::size_t size = c == 0 ? 300 : 100;
      NodeId prev = g.add_node();
      for (std::size_t i = 1; i < size; ++i) {
        const NodeId v = g.add_node();
        g.add_edge(prev, v);
        prev = v;
      }
    }
    for (int round = 0; round < 50; ++round) {
      const std::size_t before = connected_components(g).components.size();
      const auto fresh = replenish_random(g, 10, 3.0, rng);
      for (NodeId v : fresh) CHECK(g.degree(v) >= 1);
      CHECK(connected_components(g).components.size() >= before);
    }
    CHECK(connected_components(g).components.size() == 2);
  }
}

TEST_CASE("scale-free replenishment") {
  Rng rng(2);
  SUBCASE("count 0") {
    Graph g = oracle::from_edges(3, {{0, 1}, {1, 2}});
    const Graph before = g;
    replenish_scale_free(g, 0, 2, rng);
    CHECK(g == before);
  }
  SUBCASE("empty graph chains newcomers") {
    Graph g;
    replenish_scale_free(g, 4, 3, rng);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(connected_components(g).components.size() == 1);
  }
  SUBCASE("targets follow degree proportions") {
    // Degrees 4, 2, 2, 2, 1, 1 over 12 endpoint slots.
    const Graph base = oracle::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 5}});
    std::map<NodeId, double> hits;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      Graph g = base;
      const auto fresh = replenish_scale_free(g, 1, 1, rng);
      ++hits[*g.neighbors(fresh.at(0)).begin()];
    }
    double chi2 = 0.0;
    for (const auto& [v, nbrs] : base) {
      const double expected = trials * static_cast<double>(nbrs.size()) / 12.0;
      chi2 += (hits[v] - expected) * (hits[v] - expected) / expected;
    }
    // df = 5: mean 5, sd sqrt(10); allow mean + 3 sd.
    CHECK(chi2 < 5.0 + 3.0 * std::sqrt(10.0));
  }
  SUBCASE("distinct targets within one component") {
    Graph g = oracle::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}});
    for (int i = 0; i < 40; ++i) {
      const auto fresh = replenish_scale_free(g, 1, 3, rng);
      CHECK(g.degree(fresh.at(0)) == 3);
    }
    CHECK(connected_components(g).components.size() == 2);
  }
}

TEST_CASE("ring formation") {
  Rng rng(3);
  Fixture f = hub(9, 2);
  GroupRegistry reg;
  adapt_rings(f.g, reg, spec_with(3, 5.0), f.fresh, rng);

  REQUIRE(reg.groups().size() == 1);
  const Group& ring = reg.groups()[0];
  CHECK(ring.kind == GroupKind::ring);
  REQUIRE(ring.members.size() == 3);
  CHECK(ring.members[0] == f.founder);
  CHECK(std::is_permutation(ring.members.begin() + 1, ring.members.end(), f.fresh.begin()));
  CHECK(internal_edges(f.g, ring.members) == 3);
  for (NodeId m : ring.members) CHECK(external_degree(f.g, m, ring.members) == 3);
  // Every former neighbour still hangs off exactly one member.
  for (NodeId leaf : f.leaves) {
    std::size_t links = 0;
    for (NodeId m : ring.members) links += f.g.has_edge(leaf, m);
    CHECK(links == 1);
  }
  f.g.audit();
}

TEST_CASE("clique formation") {
  Rng rng(4);
  Fixture f = hub(12, 3);
  GroupRegistry reg;
  adapt_cliques(f.g, reg, spec_with(4, 6.0), f.fresh, rng);

  REQUIRE(reg.groups().size() == 1);
  const Group& clique = reg.groups()[0];
  CHECK(clique.kind == GroupKind::clique);
  REQUIRE(clique.members.size() == 4);
  CHECK(internal_edges(f.g, clique.members) == 6);
  for (NodeId m : clique.members) CHECK(external_degree(f.g, m, clique.members) == 3);
}

TEST_CASE("external links are shared within one") {
  Rng rng(5);
  for (std::size_t leaves : {7u, 10u, 11u, 13u}) {
    Fixture f = hub(leaves, 3);
    GroupRegistry reg;
    adapt_cliques(f.g, reg, spec_with(4, 5.0), f.fresh, rng);
    REQUIRE(reg.groups().size() == 1);
    const auto& members = reg.groups()[0].members;
    std::vector<std::size_t> ext;
    for (NodeId m : members) ext.push_back(external_degree(f.g, m, members));
    CHECK(*std::max_element(ext.begin(), ext.end()) - *std::min_element(ext.begin(), ext.end()) <= 1);
  }
}

TEST_CASE("neighbours are recruited when newcomers run out") {
  Rng rng(6);
  // Founder 0 with neighbours 1..6; node 1 and 2 are the low-degree ones.
  Graph g = oracle::from_edges(
      11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 10}});
  GroupRegistry reg;
  adapt_rings(g, reg, spec_with(3, 5.0), {}, rng);
  REQUIRE(reg.groups().size() == 1);
  const auto& members = reg.groups()[0].members;
  CHECK(std::is_permutation(members.begin(), members.end(),
                            std::vector<NodeId>{id(0), id(1), id(2)}.begin()));
  CHECK(connected_components(g).components.size() == 1);
}

TEST_CASE("recruits already in a group are passed over") {
  Rng rng(7);
  Fixture f = hub(9, 3);
  GroupRegistry reg;
  reg.add(GroupKind::ring, {f.fresh[0], f.leaves[5]});
  adapt_rings(f.g, reg, spec_with(3, 5.0), f.fresh, rng);
  REQUIRE(reg.groups().size() == 2);
  const auto& members = reg.groups()[1].members;
  CHECK(std::find(members.begin(), members.end(), f.fresh[0]) == members.end());
  CHECK(reg.disjoint());
}

TEST_CASE("founders are skipped when the rules say so") {
  Rng rng(8);
  SUBCASE("degree exactly at the threshold") {
    Fixture f = hub(12, 3);
    const Graph before = f.g;
    GroupRegistry reg;
    adapt_cliques(f.g, reg, spec_with(4, 12.0), f.fresh, rng);
    CHECK(reg.groups().empty());
    CHECK(f.g == before);
  }
  SUBCASE("not enough recruits") {
    Fixture f = hub(5, 0);
    const Graph before = f.g;
    GroupRegistry reg;
    adapt_cliques(f.g, reg, spec_with(10, 3.0), {}, rng);
    CHECK(reg.groups().empty());
    CHECK(f.g == before);
  }
  SUBCASE("newcomers in another component are not eligible") {
    Fixture f = hub(6, 0);
    const NodeId a = f.g.add_node();
    const NodeId b = f.g.add_node();
    f.g.add_edge(a, b);
    GroupRegistry reg;
    const std::vector<NodeId> fresh{a, b};
    adapt_rings(f.g, reg, spec_with(3, 4.0), fresh, rng);
    REQUIRE(reg.groups().size() == 1);
    CHECK(f.g.has_edge(a, b));
    CHECK_FALSE(reg.contains(a));
  }
  SUBCASE("external share required") {
    Fixture f = hub(3, 3);
    DefenseSpec s = spec_with(4, 2.5);
    s.require_external_share = true;
    GroupRegistry reg;
    const Graph before = f.g;
    adapt_cliques(f.g, reg, s, f.fresh, rng);
    CHECK(reg.groups().empty());
    CHECK(f.g == before);
    s.require_external_share = false;
    adapt_cliques(f.g, reg, s, f.fresh, rng);
    CHECK(reg.groups().size() == 1);
  }
}

TEST_CASE("group formation never merges components") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    Graph g = generate_ba(BAParams{10, 5, 2, 200}, rng);
    // Split the network a little so several components exist.
    for (int i = 0; i < 15; ++i) g.remove_node(g.nodes()[rng.uniform_index(g.node_count())]);
    const auto fresh = replenish_random(g, 15, 4.0, rng);
    GroupRegistry reg;
    DefenseSpec s;
    s.group_size = 4;
    const std::size_t before = connected_components(g).components.size();
    adapt_cliques(g, reg, s, fresh, rng);
    CHECK(connected_components(g).components.size() >= before);
    CHECK(reg.disjoint());
    for (const Group& grp : reg.groups()) {
      CHECK(internal_edges(g, grp.members) == grp.members.size() * (grp.members.size() - 1) / 2);
    }
    g.audit();
  }
}

TEST_CASE("delegation") {
  Rng rng(9);
  SUBCASE("single rewire") {
    // v = 2 with neighbours 0 and 1.
    Graph g = oracle::from_edges(3, {{2, 0}, {2, 1}});
    DefenseSpec s;
    s.vuln_threshold = 1.0;
    adapt_delegate(g, s, rng);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(id(2)) == 1);
    CHECK(g.has_edge(id(0), id(1)));
  }
  SUBCASE("inside a clique nothing moves") {
    Graph g = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Graph before = g;
    DefenseSpec s;
    s.vuln_threshold = 1.0;
    adapt_delegate(g, s, rng);
    CHECK(g == before);
  }
  SUBCASE("edge and node counts are conserved") {
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = oracle::random_graph(40, 0.15, rng);
      const auto nodes = g.node_count();
      const auto edges = g.edge_count();
      DefenseSpec s;
      s.delegation_steps = 1 + rng.uniform_index(3);
      adapt_delegate(g, s, rng);
      CHECK(g.node_count() == nodes);
      CHECK(g.edge_count() == edges);
      g.audit();
    }
  }
  SUBCASE("pairs are uniform") {
    // v = 3 with neighbours 0, 1, 2: six ordered (deputy, other) pairs.
    const Graph base = oracle::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
    DefenseSpec s;
    s.vuln_threshold = 2.0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> seen;
    for (int t = 0; t < 1200; ++t) {
      Graph g = base;
      adapt_delegate(g, s, rng);
      std::uint64_t dropped = 0;
      for (std::uint64_t b = 0; b < 3; ++b) dropped += b * !g.has_edge(id(3), id(b));
      std::uint64_t deputy = 0;
      for (std::uint64_t a = 0; a < 3; ++a) {
        if (a != dropped && g.has_edge(id(a), id(dropped))) deputy = a;
      }
      ++seen[{deputy, dropped}];
    }
    CHECK(seen.size() == 6);
    for (const auto& [pair, n] : seen) {
      CHECK(n > 140);
      CHECK(n < 260);
    }
  }
}

TEST_CASE("delegate then clique") {
  Rng rng(10);
  Fixture f = hub(12, 3);
  GroupRegistry reg;
  const std::size_t edges = f.g.edge_count();
  adapt_delegate_then_clique(f.g, reg, spec_with(4, 6.0), f.fresh, rng);
  // Delegation conserves edges; the clique adds 6 and its recruits drop 3.
  CHECK(reg.groups().size() == 1);
  CHECK(f.g.edge_count() == edges + 3);
  f.g.audit();
}
