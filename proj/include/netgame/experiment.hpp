#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/config.hpp"
#include "netgame/game.hpp"

namespace netgame {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One game of a batch: a seed paired with an optional sweep value.
struct Job {
  std::size_t run_id = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> sweep_value;
  GameConfig config;
};

/// Jobs ordered sweep value major, seed minor; run_id is the position.
std::vector<Job> plan_jobs(const ExperimentConfig& cfg);

/// Runs every job on up to `workers` threads (0 = hardware concurrency).
/// Results are indexed by run_id, so the output does not depend on
/// scheduling.
std::vector<GameTrace> run_jobs(const std::vector<Job>& jobs, unsigned workers);

struct RoundStats {
  std::size_t round = 0;
  double lcc_mean = 0.0;
  double lcc_sd = 0.0;
  double aigl_mean = 0.0;
  double aigl_sd = 0.0;
};

struct GroupSummary {
  std::string sweep_value;  ///< empty without a sweep
  std::size_t runs = 0;
  std::vector<RoundStats> rounds;
  double equilibrium_lcc_mean = 0.0;
  double equilibrium_aigl_mean = 0.0;
};

/// Per sweep value, per round mean and sample standard deviation across seeds.
std::vector<GroupSummary> summarize(const std::vector<Job>& jobs,
                                    const std::vector<GameTrace>& traces);

/// CSV header `run_id,seed,sweep_param,sweep_value,round,nodes,edges,lcc,aigl`,
/// one row per record, rows in (run_id, round) order.
void emit_csv(std::ostream& os, const std::string& sweep_param, const std::vector<Job>& jobs,
              const std::vector<GameTrace>& traces);

void emit_summary_csv(std::ostream& os, const std::vector<GroupSummary>& groups);

struct ExperimentResult {
  std::vector<Job> jobs;
  std::vector<GameTrace> traces;
  std::vector<GroupSummary> summary;
};

/// Runs the batch and writes the trace CSV to cfg.output_path. Throws
/// IoError if the file cannot be written.
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned workers);

}  // namespace netgame
