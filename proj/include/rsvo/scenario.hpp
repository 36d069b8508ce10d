#ifndef RSVO_SCENARIO_HPP
#define RSVO_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsvo/sim.hpp"

namespace rsvo {

/// A fully specified simulation case: engine configuration plus the agent
/// roster. merge_y is set for ramp-style scenarios (the Y line whose first
/// crossing is the per-vehicle merge time); NaN otherwise.
struct ScenarioConfig {
    std::string name = "custom";
    SimConfig sim;
    std::vector<AgentState> agents;
    double merge_y = std::numeric_limits<double>::quiet_NaN();
    std::string out_dir = "out";

    void validate() const;
};

/// Names accepted by load_preset / the CLI --scenario flag.
std::vector<std::string> preset_names();

/// Built-in scenarios:
///   swap               two agents trading corners of a 10 m diagonal, equal scores
///   swap_ego           same, agent 1 egoistic (weights 0.8 / 0.2)
///   swap_alt           same, agent 1 altruistic (weights 0.2 / 0.8)
///   ramp               two double-integrator vehicles converging on a merge
///                      line at Y = 70 m, equal scores
///   ramp_v2_altruistic ramp with vehicle 2 the altruistic one (case 2)
///   ramp_v2_egoistic   ramp with both egoistic, vehicle 2 more so (case 3)
///   circular6          six agents on a circle swapping with their opposites;
///                      odd agents altruistic, even agents egoistic
ScenarioConfig load_preset(const std::string& name);

/// Loads a JSON scenario file, or a preset when `path` names one. Missing
/// fields take the defaults documented in the README. Throws ParseError on
/// malformed input and ValidationError (naming the field) on invariant
/// violations, including pairwise-unsafe starts.
ScenarioConfig load_scenario(const std::string& path);

/// Serializes a config to the same JSON schema load_scenario reads;
/// load_scenario(save) round-trips exactly.
void save_scenario(const ScenarioConfig& config, const std::string& path);
std::string scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const std::string& text, const std::string& origin);

struct OutputPaths {
    std::string dir;
    std::string trajectory_csv() const { return dir + "/trajectory.csv"; }
    std::string pairwise_csv() const { return dir + "/pairwise.csv"; }
    std::string summary_json() const { return dir + "/summary.json"; }
    std::string config_json() const { return dir + "/config.json"; }
};

/// Writes trajectory.csv, pairwise.csv and summary.json (fixed schemas, LF
/// line endings, shortest round-trip decimals). Reruns with the same seed
/// produce byte-identical files.
void write_outputs(const TrajectoryLog& log, const Metrics& metrics, const OutputPaths& paths);

/// Full single-run pipeline: validate, run, compute metrics, and (when
/// paths.dir is nonempty) write outputs plus the resolved config.
struct RunResult {
    TrajectoryLog log;
    Metrics metrics;
};
RunResult run_scenario(const ScenarioConfig& config);

/// Recomputes Metrics from previously written outputs (config.json,
/// trajectory.csv, pairwise.csv), replaying deadlock detection offline.
Metrics metrics_from_outputs(const OutputPaths& paths);

/// One seed of a sweep: the drawn scores and the paired asymmetric /
/// symmetric-baseline runs on them.
struct SweepRun {
    std::uint64_t seed = 0;
    std::vector<double> thetas;
    Metrics asymmetric;
    Metrics symmetric;
};

struct RunSummary {
    std::vector<SweepRun> runs;
    std::vector<double> avg_min_distance_asym;  // per step, mean over runs
    std::vector<double> avg_min_distance_sym;
    double mean_completion_steps_asym = 0.0;
    double mean_completion_steps_sym = 0.0;
    double mean_deadlock_steps_asym = 0.0;
    double mean_deadlock_steps_sym = 0.0;
    double completion_improvement = 0.0;  // relative reduction vs the baseline
    double deadlock_improvement = 0.0;
};

/// Draws per-agent scores uniformly from theta_range for each of n_seeds
/// seeds (base.sim.seed + k), rejecting repeated values, and runs both modes
/// on every draw. Series are aggregated by arithmetic mean, shorter runs
/// padded with their final value.
RunSummary run_sweep(const ScenarioConfig& base, int n_seeds, double theta_lo, double theta_hi);

std::string sweep_summary_to_json(const RunSummary& summary);

}  // namespace rsvo

#endif  // RSVO_SCENARIO_HPP
