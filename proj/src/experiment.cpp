#include "netgame/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace netgame {

std::vector<Job> plan_jobs(const ExperimentConfig& cfg) {
  std::vector<std::optional<std::string>> values;
  if (cfg.sweep) {
    values.assign(cfg.sweep->values.begin(), cfg.sweep->values.end());
  } else {
    values.push_back(std::nullopt);
  }

  std::vector<Job> jobs;
  for (const auto& value : values) {
    GameConfig base = cfg.base;
    if (value) {
      if (auto err = apply_game_setting(base, cfg.sweep->param, *value)) {
        throw ConfigError(cfg.sweep->param + ": " + *err, {cfg.sweep->param});
      }
    }
    for (std::uint64_t seed : cfg.seeds) {
      Job job;
      job.run_id = jobs.size();
      job.seed = seed;
      job.sweep_value = value;
      job.config = base;
      job.config.seed = seed;
      jobs.push_back(std::move(job));
    }
  }
  return jobs;
}

std::vector<GameTrace> run_jobs(const std::vector<Job>& jobs, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs.size(), 1)));

  std::vector<GameTrace> traces(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        traces[i] = run_game(jobs[i].config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  double sd() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

std::vector<GroupSummary> summarize(const std::vector<Job>& jobs,
                                    const std::vector<GameTrace>& traces) {
  std::vector<GroupSummary> groups;
  std::map<std::string, std::size_t> index;
  struct Acc {
    std::vector<Accumulator> lcc, aigl;
    Accumulator eq_lcc, eq_aigl;
  };
  std::vector<Acc> accs;

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string label = jobs[i].sweep_value.value_or("");
    auto [it, inserted] = index.emplace(label, groups.size());
    if (inserted) {
      groups.push_back({label, 0, {}, 0.0, 0.0});
      accs.emplace_back();
    }
    auto& group = groups[it->second];
    auto& acc = accs[it->second];
    const auto& recs = traces[i].records;
    if (acc.lcc.size() < recs.size()) {
      acc.lcc.resize(recs.size());
      acc.aigl.resize(recs.size());
    }
    for (std::size_t r = 0; r < recs.size(); ++r) {
      acc.lcc[r].add(static_cast<double>(recs[r].lcc_size));
      acc.aigl[r].add(recs[r].aigl);
    }
    acc.eq_lcc.add(equilibrium_lcc(traces[i]));
    acc.eq_aigl.add(equilibrium_aigl(traces[i]));
    ++group.runs;
  }

  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t r = 0; r < accs[g].lcc.size(); ++r) {
      groups[g].rounds.push_back({r, accs[g].lcc[r].mean(), accs[g].lcc[r].sd(),
                                  accs[g].aigl[r].mean(), accs[g].aigl[r].sd()});
    }
    groups[g].equilibrium_lcc_mean = accs[g].eq_lcc.mean();
    groups[g].equilibrium_aigl_mean = accs[g].eq_aigl.mean();
  }
  return groups;
}

void emit_csv(std::ostream& os, const std::string& sweep_param, const std::vector<Job>& jobs,
              const std::vector<GameTrace>& traces) {
  os << "run_id,seed,sweep_param,sweep_value,round,nodes,edges,lcc,aigl\n";
  char aigl[32];
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    const std::string param = job.sweep_value ? sweep_param : std::string();
    for (const RoundRecord& rec : traces[i].records) {
      std::snprintf(aigl, sizeof aigl, "%.6f", rec.aigl);
      os << job.run_id << ',' << job.seed << ',' << param << ',' << job.sweep_value.value_or("")
         << ',' << rec.round << ',' << rec.node_count << ',' << rec.edge_count << ','
         << rec.lcc_size << ',' << aigl << '\n';
    }
  }
}

void emit_summary_csv(std::ostream& os, const std::vector<GroupSummary>& groups) {
  os << "sweep_value,round,runs,lcc_mean,lcc_sd,aigl_mean,aigl_sd\n";
  char line[256];
  for (const auto& g : groups) {
    for (const auto& r : g.rounds) {
      std::snprintf(line, sizeof line, "%zu,%zu,%.4f,%.4f,%.6f,%.6f\n", r.round, g.runs,
                    r.lcc_mean, r.lcc_sd, r.aigl_mean, r.aigl_sd);
      os << g.sweep_value << ',' << line;
    }
  }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned workers) {
  ExperimentResult result;
  result.jobs = plan_jobs(cfg);

  // Open the output before simulating so an unwritable path fails fast.
  std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + cfg.output_path + " for writing");

  result.traces = run_jobs(result.jobs, workers);
  result.summary = summarize(result.jobs, result.traces);

  emit_csv(out, cfg.sweep ? cfg.sweep->param : std::string(), result.jobs, result.traces);
  out.flush();
  if (!out) throw IoError("write failure on " + cfg.output_path);
  return result;
}

}  // namespace netgame
