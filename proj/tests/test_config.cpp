#include <doctest.h>

#include <algorithm>

#include "netgame/config.hpp"

using namespace netgame;

namespace {

bool lists_key(const ConfigError& e, const std::string& key) {
  return std::find(e.keys().begin(), e.keys().end(), key) != e.keys().end();
}

}  // namespace

TEST_CASE("settings parser") {
  const auto s = parse_settings("# header\n\nattack.kind = centrality  \n  game.rounds=12 # trailing\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0].key == "attack.kind");
  CHECK(s[0].value == "centrality");
  CHECK(s[1].key == "game.rounds");
  CHECK(s[1].value == "12");

  const Setting o = parse_override("defense.group_size=8");
  CHECK(o.key == "defense.group_size");
  CHECK(o.value == "8");
  CHECK_THROWS_AS(parse_override("novalue"), ConfigError);
  CHECK_THROWS_AS(parse_settings("just words\n"), ConfigError);
}

TEST_CASE("defaults") {
  const ExperimentConfig cfg = build_experiment({});
  CHECK(cfg.seeds.size() == 20);
  CHECK(cfg.seeds.front() == 1);
  CHECK(cfg.seeds.back() == 20);
  CHECK(cfg.base.generator.target_n == 400);
  CHECK(cfg.base.generator.m0 == 40);
  CHECK(cfg.base.attack.budget == 10);
  CHECK(cfg.base.rounds == 30);
  CHECK(cfg.base.disruption_fraction == 0.5);
  CHECK(cfg.base.min_component == 2);
  CHECK_FALSE(cfg.sweep);
}

TEST_CASE("every key applies") {
  const ExperimentConfig cfg = build_experiment(parse_settings(R"(
generator.m0 = 20
generator.m = 5
generator.edges_per_node = 2
generator.n = 100
attack.kind = edge_degree_product
attack.budget = 3
defense.replenish = scale_free
defense.adapt = delegate_then_clique
defense.group_size = 6
defense.threshold = 7.5
defense.k = 3
defense.delegation_steps = 2
defense.immunize_rounds = 4
defense.external_share = true
game.rounds = 9
game.disruption_fraction = 0.25
game.min_component = 3
seeds = 5, 9
sweep.param = defense.group_size
sweep.values = 4, 8
output.path = out.csv
)"));
  CHECK(cfg.base.generator.m0 == 20);
  CHECK(cfg.base.generator.m == 5);
  CHECK(cfg.base.generator.edges_per_node == 2);
  CHECK(cfg.base.generator.target_n == 100);
  CHECK(cfg.base.attack.kind == AttackKind::edge_degree_product);
  CHECK(cfg.base.attack.budget == 3);
  CHECK(cfg.base.defense.replenish == ReplenishKind::scale_free);
  CHECK(cfg.base.defense.adapt == AdaptKind::delegate_then_clique);
  CHECK(cfg.base.defense.group_size == 6);
  CHECK(cfg.base.defense.vuln_threshold == 7.5);
  CHECK(cfg.base.defense.target_mean_degree_k == 3.0);
  CHECK(cfg.base.defense.delegation_steps == 2);
  CHECK(cfg.base.defense.immunize_rounds == 4);
  CHECK(cfg.base.defense.require_external_share);
  CHECK(cfg.base.rounds == 9);
  CHECK(cfg.base.disruption_fraction == 0.25);
  CHECK(cfg.base.min_component == 3);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{5, 9});
  REQUIRE(cfg.sweep);
  CHECK(cfg.sweep->param == "defense.group_size");
  CHECK(cfg.sweep->values == std::vector<std::string>{"4", "8"});
  CHECK(cfg.output_path == "out.csv");
}

TEST_CASE("seed ranges and later settings win") {
  const auto cfg = build_experiment(
      {{"seeds.start", "100"}, {"seeds.count", "3"}, {"game.rounds", "4"}, {"game.rounds", "7"}});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{100, 101, 102});
  CHECK(cfg.base.rounds == 7);
}

TEST_CASE("errors list every offending key") {
  try {
    build_experiment({{"attack.kind", "nuke"},
                      {"defense.group_size", "2"},
                      {"game.rounds", "-1"},
                      {"bogus.key", "1"},
                      {"defense.adapt", "clique"}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(lists_key(e, "attack.kind"));
    CHECK(lists_key(e, "defense.group_size"));
    CHECK(lists_key(e, "game.rounds"));
    CHECK(lists_key(e, "bogus.key"));
    CHECK_FALSE(lists_key(e, "defense.adapt"));
    CHECK(std::string(e.what()).find("bogus.key") != std::string::npos);
  }
}

TEST_CASE("cross-field validation") {
  CHECK_THROWS_AS(build_experiment({{"generator.edges_per_node", "50"}}), ConfigError);
  CHECK_THROWS_AS(build_experiment({{"sweep.param", "defense.group_size"}}), ConfigError);
  CHECK_THROWS_AS(
      build_experiment({{"sweep.param", "defense.group_size"}, {"sweep.values", "8, two"}}),
      ConfigError);
  CHECK_THROWS_AS(build_experiment({{"sweep.param", "nope"}, {"sweep.values", "1"}}), ConfigError);
  CHECK_THROWS_AS(build_experiment({{"seeds.count", "0"}}), ConfigError);
}

TEST_CASE("describe round-trips") {
  const auto original = build_experiment({{"attack.kind", "centrality"},
                                          {"defense.threshold", "auto"},
                                          {"defense.k", "4.5"},
                                          {"seeds", "3,4"}});
  const std::string text = describe(original);
  CHECK(text.find("defense.threshold = auto") != std::string::npos);
  const auto again = build_experiment(parse_settings(text));
  CHECK(describe(again) == text);
  CHECK(again.base.defense.target_mean_degree_k == 4.5);
}
