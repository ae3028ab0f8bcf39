#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

/// Configuration problem. keys() names every offending key (or `line N`
/// for lines that could not be parsed at all).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::vector<std::string> keys)
      : std::runtime_error(what), keys_(std::move(keys)) {}

  const std::vector<std::string>& keys() const noexcept { return keys_; }

 private:
  std::vector<std::string> keys_;
};

struct Setting {
  std::string key;
  std::string value;
};

/// Parses `key = value` lines. Blank lines and `#` comments (whole-line or
/// trailing) are ignored.
std::vector<Setting> parse_settings(std::string_view text);

/// Parses a `key=value` override as given to --set.
Setting parse_override(std::string_view text);

/// Applies one dotted game key (e.g. `defense.group_size`). Returns an error
/// message for an unknown key or a malformed value.
std::optional<std::string> apply_game_setting(GameConfig& config, std::string_view key,
                                              std::string_view value);

/// Every game key with its current value, in canonical order.
std::vector<Setting> game_settings(const GameConfig& config);

struct Sweep {
  std::string param;
  std::vector<std::string> values;
};

struct ExperimentConfig {
  GameConfig base;
  std::vector<std::uint64_t> seeds;
  std::optional<Sweep> sweep;
  std::string output_path = "results.csv";
};

/// Builds and validates an experiment from settings (later settings win).
/// Seeds default to 1..20. Throws ConfigError listing every bad key.
ExperimentConfig build_experiment(const std::vector<Setting>& settings);

/// Resolved configuration, defaults included, in the config file syntax.
std::string describe(const ExperimentConfig& config);

}  // namespace netgame
