#include "netgame/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace netgame {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Field {
  std::function<std::optional<std::string>(GameConfig&, std::string_view)> set;
  std::function<std::string(const GameConfig&)> get;
};

template <typename Member>
Field count_field(Member member, std::size_t minimum) {
  return {[member, minimum](GameConfig& c, std::string_view v) -> std::optional<std::string> {
            auto n = parse_number<std::size_t>(v);
            if (!n) return "expected a non-negative integer";
            if (*n < minimum) return "must be at least " + std::to_string(minimum);
            member(c) = *n;
            return std::nullopt;
          },
          [member](const GameConfig& c) { return std::to_string(member(c)); }};
}

template <typename Member>
Field auto_real_field(Member member) {
  return {[member](GameConfig& c, std::string_view v) -> std::optional<std::string> {
            if (trim(v) == "auto") {
              member(c).reset();
              return std::nullopt;
            }
            auto x = parse_number<double>(v);
            if (!x) return "expected a number or `auto`";
            member(c) = *x;
            return std::nullopt;
          },
          [member](const GameConfig& c) {
            const auto& value = member(c);
            return value ? format_real(*value) : std::string("auto");
          }};
}

const std::vector<std::pair<std::string, Field>>& field_table() {
  static const std::vector<std::pair<std::string, Field>> table = [] {
    std::vector<std::pair<std::string, Field>> t;
    t.emplace_back("generator.m0", count_field([](auto& c) -> auto& { return c.generator.m0; }, 0));
    t.emplace_back("generator.m", count_field([](auto& c) -> auto& { return c.generator.m; }, 0));
    t.emplace_back("generator.edges_per_node",
                   count_field([](auto& c) -> auto& { return c.generator.edges_per_node; }, 0));
    t.emplace_back("generator.n", count_field([](auto& c) -> auto& { return c.generator.target_n; }, 0));
    t.emplace_back("attack.kind",
                   Field{[](GameConfig& c, std::string_view v) -> std::optional<std::string> {
                           auto k = parse_attack_kind(trim(v));
                           if (!k) return "expected vertex_order, centrality, edge_degree_product or random_node";
                           c.attack.kind = *k;
                           return std::nullopt;
                         },
                         [](const GameConfig& c) { return std::string(to_string(c.attack.kind)); }});
    t.emplace_back("attack.budget", count_field([](auto& c) -> auto& { return c.attack.budget; }, 0));
    t.emplace_back("defense.replenish",
                   Field{[](GameConfig& c, std::string_view v) -> std::optional<std::string> {
                           auto k = parse_replenish_kind(trim(v));
                           if (!k) return "expected none, random or scale_free";
                           c.defense.replenish = *k;
                           return std::nullopt;
                         },
                         [](const GameConfig& c) { return std::string(to_string(c.defense.replenish)); }});
    t.emplace_back("defense.adapt",
                   Field{[](GameConfig& c, std::string_view v) -> std::optional<std::string> {
                           auto k = parse_adapt_kind(trim(v));
                           if (!k) return "expected none, ring, clique, delegate or delegate_then_clique";
                           c.defense.adapt = *k;
                           return std::nullopt;
                         },
                         [](const GameConfig& c) { return std::string(to_string(c.defense.adapt)); }});
    t.emplace_back("defense.group_size",
                   count_field([](auto& c) -> auto& { return c.defense.group_size; }, 3));
    t.emplace_back("defense.threshold",
                   auto_real_field([](auto& c) -> auto& { return c.defense.vuln_threshold; }));
    t.emplace_back("defense.k",
                   auto_real_field([](auto& c) -> auto& { return c.defense.target_mean_degree_k; }));
    t.emplace_back("defense.delegation_steps",
                   count_field([](auto& c) -> auto& { return c.defense.delegation_steps; }, 1));
    t.emplace_back("defense.immunize_rounds",
                   count_field([](auto& c) -> auto& { return c.defense.immunize_rounds; }, 0));
    t.emplace_back("defense.external_share",
                   Field{[](GameConfig& c, std::string_view v) -> std::optional<std::string> {
                           v = trim(v);
                           if (v != "true" && v != "false") return "expected true or false";
                           c.defense.require_external_share = v == "true";
                           return std::nullopt;
                         },
                         [](const GameConfig& c) {
                           return std::string(c.defense.require_external_share ? "true" : "false");
                         }});
    t.emplace_back("game.rounds", count_field([](auto& c) -> auto& { return c.rounds; }, 0));
    t.emplace_back("game.disruption_fraction",
                   Field{[](GameConfig& c, std::string_view v) -> std::optional<std::string> {
                           auto x = parse_number<double>(v);
                           if (!x || !(*x > 0.0 && *x <= 1.0)) return "expected a number in (0, 1]";
                           c.disruption_fraction = *x;
                           return std::nullopt;
                         },
                         [](const GameConfig& c) { return format_real(c.disruption_fraction); }});
    t.emplace_back("game.min_component",
                   count_field([](auto& c) -> auto& { return c.min_component; }, 1));
    return t;
  }();
  return table;
}

const Field* find_field(std::string_view key) {
  for (const auto& [name, field] : field_table()) {
    if (name == key) return &field;
  }
  return nullptr;
}

}  // namespace

std::vector<Setting> parse_settings(std::string_view text) {
  std::vector<Setting> out;
  std::vector<std::string> bad;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    line = trim(line.substr(0, line.find('#')));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
      bad.push_back("line " + std::to_string(line_no));
      continue;
    }
    out.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))});
  }
  if (!bad.empty()) throw ConfigError("malformed config lines", std::move(bad));
  return out;
}

Setting parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || trim(text.substr(0, eq)).empty()) {
    throw ConfigError("override must look like key=value", {std::string(text)});
  }
  return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
}

std::optional<std::string> apply_game_setting(GameConfig& config, std::string_view key,
                                              std::string_view value) {
  const Field* field = find_field(key);
  if (!field) return "unknown key";
  return field->set(config, value);
}

std::vector<Setting> game_settings(const GameConfig& config) {
  std::vector<Setting> out;
  for (const auto& [name, field] : field_table()) out.push_back({name, field.get(config)});
  return out;
}

ExperimentConfig build_experiment(const std::vector<Setting>& settings) {
  ExperimentConfig cfg;
  std::map<std::string, std::string> problems;
  std::optional<std::uint64_t> seed_start;
  std::optional<std::uint64_t> seed_count;
  std::optional<std::string> sweep_param;
  std::optional<std::vector<std::string>> sweep_values;

  for (const auto& [key, value] : settings) {
    if (key == "seeds") {
      cfg.seeds.clear();
      for (auto item : split_list(value)) {
        auto s = parse_number<std::uint64_t>(item);
        if (!s) {
          problems[key] = "expected a comma-separated list of integers";
          break;
        }
        cfg.seeds.push_back(*s);
      }
    } else if (key == "seeds.start" || key == "seeds.count") {
      auto s = parse_number<std::uint64_t>(value);
      if (!s) {
        problems[key] = "expected a non-negative integer";
      } else {
        (key == "seeds.start" ? seed_start : seed_count) = *s;
      }
    } else if (key == "sweep.param") {
      sweep_param = value;
    } else if (key == "sweep.values") {
      sweep_values.emplace();
      for (auto item : split_list(value)) {
        if (!item.empty()) sweep_values->emplace_back(item);
      }
    } else if (key == "output.path") {
      cfg.output_path = value;
    } else if (auto err = apply_game_setting(cfg.base, key, value)) {
      problems[key] = *err;
    }
  }

  if (seed_start || seed_count) {
    if (seed_count && *seed_count == 0) problems["seeds.count"] = "must be positive";
    cfg.seeds.clear();
    for (std::uint64_t i = 0; i < seed_count.value_or(20); ++i) cfg.seeds.push_back(seed_start.value_or(1) + i);
  } else if (cfg.seeds.empty() && !problems.contains("seeds")) {
    for (std::uint64_t s = 1; s <= 20; ++s) cfg.seeds.push_back(s);
  }

  if (sweep_param || sweep_values) {
    if (!sweep_param) {
      problems["sweep.param"] = "missing while sweep.values is set";
    } else if (!sweep_values || sweep_values->empty()) {
      problems["sweep.values"] = "must list at least one value";
    } else {
      for (const auto& v : *sweep_values) {
        GameConfig probe = cfg.base;
        if (auto err = apply_game_setting(probe, *sweep_param, v)) {
          problems["sweep.param"] = "value `" + v + "`: " + *err;
          break;
        }
        try {
          validate(probe);
        } catch (const std::invalid_argument& e) {
          problems["sweep.values"] = "value `" + v + "`: " + e.what();
          break;
        }
      }
      if (!problems.contains("sweep.param") && !problems.contains("sweep.values")) {
        cfg.sweep = Sweep{*sweep_param, *sweep_values};
      }
    }
  }

  if (problems.empty()) {
    try {
      validate(cfg.base);
    } catch (const std::invalid_argument& e) {
      problems["(game)"] = e.what();
    }
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid configuration:";
    std::vector<std::string> keys;
    for (const auto& [key, why] : problems) {
      msg << "\n  " << key << ": " << why;
      keys.push_back(key);
    }
    throw ConfigError(msg.str(), std::move(keys));
  }
  return cfg;
}

std::string describe(const ExperimentConfig& cfg) {
  std::ostringstream out;
  for (const auto& [key, value] : game_settings(cfg.base)) out << key << " = " << value << '\n';
  out << "seeds = ";
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) out << (i ? "," : "") << cfg.seeds[i];
  out << '\n';
  if (cfg.sweep) {
    out << "sweep.param = " << cfg.sweep->param << "\nsweep.values = ";
    for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
      out << (i ? "," : "") << cfg.sweep->values[i];
    }
    out << '\n';
  }
  out << "output.path = " << cfg.output_path << '\n';
  return out.str();
}

}  // namespace netgame
