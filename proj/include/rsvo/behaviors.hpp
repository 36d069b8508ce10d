#ifndef RSVO_BEHAVIORS_HPP
#define RSVO_BEHAVIORS_HPP

#include <numbers>
#include <span>
#include <vector>

#include "rsvo/dynamics.hpp"
#include "rsvo/vec2.hpp"

namespace rsvo {

enum class ControllerKind { MoveToGoal, LaneFollow };

/// Task controller producing the nominal control the safety QP deviates from.
/// MoveToGoal: u = -k (x - goal), the proportional law over velocity.
/// LaneFollow: the same error split into longitudinal/lateral parts along
/// lane_axis, with critically damped velocity feedback for second-order
/// vehicles: u = -k e_long - k e_lat - 2 sqrt(k) v.
struct NominalController {
    ControllerKind kind = ControllerKind::MoveToGoal;
    double gain_k = 1.0;       // 1/s
    Vec2 lane_axis{0.0, 1.0};  // unit vector, LaneFollow only

    void validate() const;
};

/// Right-hand deadlock avoidance: while an agent is stalled against a safety
/// boundary, its nominal control is rotated clockwise by rotation_angle.
/// Detection looks at progress speed over a trailing window; hysteresis keeps
/// the rotation active for trigger_window steps after progress resumes.
struct DeadlockHeuristic {
    bool enabled = true;
    double rotation_angle = 0.2 * std::numbers::pi;  // rad, 0 < angle < pi/2
    double trigger_progress_eps = 0.05;              // m/s
    int trigger_window = 50;                         // steps

    void validate() const;
};

Vec2 nominal_control(const AgentState& state, const NominalController& ctrl);

/// Clockwise rotation of the nominal control while deadlocked; identity
/// otherwise. Magnitude is preserved and the QP constraint set is untouched,
/// so safety is unaffected by whatever this returns.
Vec2 apply_deadlock_heuristic(Vec2 u_nominal, const DeadlockHeuristic& heur, bool deadlocked);

/// Stall detector over one agent's recent positions. True iff the goal is not
/// reached, the mean progress speed across the window is below
/// trigger_progress_eps, and the nearest pairwise barrier value nearest_h is
/// inside the activation band (nearest_h < h_activation). Returns false until
/// the history holds trigger_window + 1 samples.
bool detect_deadlock(std::span<const Vec2> history, Vec2 goal, const DeadlockHeuristic& heur,
                     double dt, double goal_tolerance, double nearest_h, double h_activation);

/// Per-agent detection state: position histories plus the hysteresis counter
/// that keeps the rotation active for trigger_window steps after a stall
/// clears. The simulation engine and the offline metrics recomputation both
/// drive this, so replayed flags match the engine's exactly.
class DeadlockTracker {
public:
    DeadlockTracker(int num_agents, DeadlockHeuristic heur, double dt, double goal_tolerance,
                    double h_activation)
        : heur_(heur),
          dt_(dt),
          goal_tolerance_(goal_tolerance),
          h_activation_(h_activation),
          history_(static_cast<std::size_t>(num_agents)),
          rotate_until_(static_cast<std::size_t>(num_agents), -1) {}

    /// Feed agent `i`'s position for step `t` (call once per agent per step,
    /// in step order) and get the deadlocked flag for that step.
    bool update(int t, int i, Vec2 x, Vec2 goal, double nearest_h);

private:
    DeadlockHeuristic heur_;
    double dt_;
    double goal_tolerance_;
    double h_activation_;
    std::vector<std::vector<Vec2>> history_;
    std::vector<int> rotate_until_;
};

}  // namespace rsvo

#endif  // RSVO_BEHAVIORS_HPP
