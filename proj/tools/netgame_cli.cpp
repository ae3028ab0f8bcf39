// netgame: run attack/defense games on scale-free networks.
//
//   netgame run <config> [--set key=value]... [--workers N] [--out PATH] [--summary PATH]
//   netgame generate <config> --out edges.txt [--set key=value]... [--seed S]
//   netgame metrics --in edges.txt [--top K]
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netgame/config.hpp"
#include "netgame/edge_list.hpp"
#include "netgame/experiment.hpp"
#include "netgame/generators.hpp"
#include "netgame/metrics.hpp"

namespace {

constexpr int kConfigError = 1;
constexpr int kIoError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw netgame::IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

netgame::ExperimentConfig load(const std::string& path, const std::vector<std::string>& overrides) {
  auto settings = netgame::parse_settings(read_file(path));
  for (const auto& o : overrides) settings.push_back(netgame::parse_override(o));
  return netgame::build_experiment(settings);
}

void log_config(const netgame::ExperimentConfig& cfg) {
  std::istringstream lines(netgame::describe(cfg));
  std::string line;
  while (std::getline(lines, line)) std::cerr << "# " << line << '\n';
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides,
            unsigned workers, const std::string& out_path, const std::string& summary_path) {
  auto cfg = load(config_path, overrides);
  if (!out_path.empty()) cfg.output_path = out_path;
  log_config(cfg);

  const auto result = netgame::run_experiment(cfg, workers);

  std::printf("%-12s %6s %14s %14s\n", "sweep_value", "runs", "eq_lcc_mean", "eq_aigl_mean");
  for (const auto& g : result.summary) {
    std::printf("%-12s %6zu %14.2f %14.6f\n", g.sweep_value.empty() ? "-" : g.sweep_value.c_str(),
                g.runs, g.equilibrium_lcc_mean, g.equilibrium_aigl_mean);
  }
  if (!summary_path.empty()) {
    std::ofstream out(summary_path, std::ios::binary | std::ios::trunc);
    if (!out) throw netgame::IoError("cannot open " + summary_path + " for writing");
    netgame::emit_summary_csv(out, result.summary);
    if (!out.flush()) throw netgame::IoError("write failure on " + summary_path);
  }
  return 0;
}

int cmd_generate(const std::string& config_path, const std::vector<std::string>& overrides,
                 const std::string& out_path, std::optional<std::uint64_t> seed) {
  auto cfg = load(config_path, overrides);
  log_config(cfg);
  netgame::Rng rng(seed.value_or(cfg.seeds.front()));
  const netgame::Graph g = netgame::generate_ba(cfg.base.generator, rng);
  netgame::write_edge_list_file(out_path, g);
  std::printf("wrote %zu nodes, %zu edges to %s\n", g.node_count(), g.edge_count(),
              out_path.c_str());
  return 0;
}

int cmd_metrics(const std::string& in_path, std::size_t top) {
  const netgame::Graph g = netgame::read_edge_list_file(in_path);
  const auto parts = netgame::connected_components(g);
  std::printf("nodes        %zu\n", g.node_count());
  std::printf("edges        %zu\n", g.edge_count());
  std::printf("mean_degree  %.4f\n", g.mean_degree());
  std::printf("components   %zu\n", parts.components.size());
  std::printf("lcc          %zu\n", parts.largest_size);
  if (g.node_count() >= 2) {
    std::printf("aigl         %.6f\n", netgame::average_inverse_geodesic_length(g));
  }

  const auto centrality = netgame::betweenness_centrality(g);
  std::vector<std::pair<netgame::NodeId, double>> ranked(centrality.begin(), centrality.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  ranked.resize(std::min(top, ranked.size()));
  std::printf("top_centrality (node degree score)\n");
  for (const auto& [id, score] : ranked) {
    std::printf("  %llu %zu %.4f\n", static_cast<unsigned long long>(id.value), g.degree(id), score);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attack/defense games on scale-free networks"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  unsigned workers = 0;
  std::string out_path;
  std::string summary_path;

  auto* run = app.add_subcommand("run", "Run a batch of games and write a CSV trace");
  run->add_option("config", config_path, "Experiment config file")->required();
  run->add_option("--set", overrides, "Override a config key (key=value)");
  run->add_option("--workers", workers, "Worker threads (0 = all cores)");
  run->add_option("--out", out_path, "CSV output path (overrides output.path)");
  run->add_option("--summary", summary_path, "Also write per-round summary CSV");

  std::string gen_out;
  std::optional<std::uint64_t> gen_seed;
  auto* generate = app.add_subcommand("generate", "Generate the initial network as an edge list");
  generate->add_option("config", config_path, "Experiment config file")->required();
  generate->add_option("--set", overrides, "Override a config key (key=value)");
  generate->add_option("--out", gen_out, "Edge-list output path")->required();
  generate->add_option("--seed", gen_seed, "Seed (default: first configured seed)");

  std::string in_path;
  std::size_t top = 10;
  auto* metrics = app.add_subcommand("metrics", "Report LCC, AIGL and top centrality of a graph");
  metrics->add_option("--in", in_path, "Edge-list input path")->required();
  metrics->add_option("--top", top, "How many top-centrality nodes to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_path, overrides, workers, out_path, summary_path);
    if (*generate) return cmd_generate(config_path, overrides, gen_out, gen_seed);
    if (*metrics) return cmd_metrics(in_path, top);
  } catch (const netgame::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const netgame::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const netgame::EdgeListError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return 0;
}
