#ifndef RSVO_SIM_HPP
#define RSVO_SIM_HPP

#include <cstdint>
#include <vector>

#include "rsvo/behaviors.hpp"
#include "rsvo/cbf.hpp"
#include "rsvo/dynamics.hpp"
#include "rsvo/qp.hpp"

namespace rsvo {

struct SimConfig {
    DynamicsModel dynamics;
    CbfParams cbf;
    Vec2 u_min{-1e9, -1e9};
    Vec2 u_max{1e9, 1e9};
    NominalController controller;
    DeadlockHeuristic heuristic;
    int max_steps = 20000;
    double goal_tolerance = 0.05;  // m
    std::uint64_t seed = 1;

    /// Baseline mode: forces omega = 0.5 for every pair while leaving the
    /// rest of the pipeline untouched, so comparisons isolate the
    /// responsibility allocation.
    bool symmetric_mode = false;

    /// When true (default) infeasible QPs fall back to the slack-relaxed
    /// program and the event is logged; when false they raise InfeasibleError.
    bool relax_infeasible = true;
    double slack_penalty = 1e6;

    void validate() const;
};

struct AgentRecord {
    AgentId id = 0;
    Vec2 x;
    Vec2 v;
    Vec2 u_nominal;  // nominal fed to the QP (after the deadlock heuristic)
    Vec2 u_star;
    QpStatus qp_status = QpStatus::Optimal;
    double slack = 0.0;
    bool deadlocked = false;
};

struct PairRecord {
    AgentId i = 0;  // i < j
    AgentId j = 0;
    double h = 0.0;
    double dist = 0.0;
    double omega_i = 0.5;  // weight of agent i against j
    double omega_j = 0.5;
};

struct StepRecord {
    int step = 0;
    std::vector<AgentRecord> agents;
    std::vector<PairRecord> pairs;
};

struct TrajectoryLog {
    std::vector<StepRecord> steps;       // states at the start of each simulated step
    std::vector<AgentState> final_states;
    int num_agents = 0;
    double dt = 0.01;
    int completion_step = -1;  // first step count at which every goal is reached, -1 if never
    int slack_events = 0;      // QP solves that needed slack beyond tolerance
};

struct Metrics {
    std::vector<double> min_pairwise_distance;  // per step, m
    std::vector<double> avg_min_distance;       // per step; equals the min series for one run
    int completion_step = -1;
    double completion_time_s = -1.0;
    int deadlock_start_step = -1;
    int deadlock_end_step = -1;
    std::vector<double> path_lengths;  // per agent, m

    /// max(0, r_safe - min distance) over the whole run; how far the discrete
    /// integration let any pair cut into the safety margin.
    double worst_boundary_incursion = 0.0;
};

/// Runs the decentralized responsibility-weighted safety loop: per step and
/// agent, recompute the pairwise R-SVO weights against every other agent,
/// stack the weighted constraint rows, solve the minimum-deviation QP on the
/// (possibly deadlock-rotated) nominal control, then integrate. All agents
/// observe the step-start snapshot and move simultaneously.
///
/// Throws UnsafeStartError when any initial pair already violates h >= 0, and
/// InfeasibleError for a hard-infeasible QP when relaxation is disabled.
TrajectoryLog run(const SimConfig& config, std::vector<AgentState> agents);

Metrics compute_metrics(const TrajectoryLog& log, double r_safe);

/// Pinned discretization allowance: pairwise distances may dip below r_safe
/// by at most this much due to fixed-step integration.
double boundary_allowance(double dt);

}  // namespace rsvo

#endif  // RSVO_SIM_HPP
