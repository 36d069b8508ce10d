#include "rsvo/behaviors.hpp"

#include <cmath>

#include "rsvo/errors.hpp"

namespace rsvo {

void NominalController::validate() const {
    if (!(gain_k > 0.0)) throw ValidationError("controller.gain_k must be > 0");
    if (kind == ControllerKind::LaneFollow && std::abs(norm(lane_axis) - 1.0) > 1e-9)
        throw ValidationError("controller.lane_axis must be a unit vector");
}

void DeadlockHeuristic::validate() const {
    if (!(rotation_angle > 0.0 && rotation_angle < std::numbers::pi / 2.0))
        throw ValidationError("heuristic.rotation_angle must lie in (0, pi/2)");
    if (!(trigger_progress_eps >= 0.0)) throw ValidationError("heuristic.trigger_progress_eps must be >= 0");
    if (trigger_window < 1) throw ValidationError("heuristic.trigger_window must be >= 1");
}

Vec2 nominal_control(const AgentState& state, const NominalController& ctrl) {
    const Vec2 err = state.x - state.goal;
    switch (ctrl.kind) {
        case ControllerKind::MoveToGoal:
            return -ctrl.gain_k * err;
        case ControllerKind::LaneFollow: {
            const Vec2 e_long = dot(err, ctrl.lane_axis) * ctrl.lane_axis;
            const Vec2 e_lat = err - e_long;
            return -ctrl.gain_k * e_long - ctrl.gain_k * e_lat -
                   2.0 * std::sqrt(ctrl.gain_k) * state.v;
        }
    }
    return {};
}

Vec2 apply_deadlock_heuristic(Vec2 u_nominal, const DeadlockHeuristic& heur, bool deadlocked) {
    if (!heur.enabled || !deadlocked) return u_nominal;
    return rotate_cw(u_nominal, heur.rotation_angle);
}

bool detect_deadlock(std::span<const Vec2> history, Vec2 goal, const DeadlockHeuristic& heur,
                     double dt, double goal_tolerance, double nearest_h, double h_activation) {
    if (!heur.enabled) return false;
    const std::size_t window = static_cast<std::size_t>(heur.trigger_window);
    if (history.size() < window + 1) return false;

    const Vec2 now = history.back();
    if (norm(now - goal) <= goal_tolerance) return false;
    if (!(nearest_h < h_activation)) return false;

    const Vec2 then = history[history.size() - 1 - window];
    const double progress_speed = norm(now - then) / (static_cast<double>(window) * dt);
    return progress_speed < heur.trigger_progress_eps;
}

bool DeadlockTracker::update(int t, int i, Vec2 x, Vec2 goal, double nearest_h) {
    auto& hist = history_[static_cast<std::size_t>(i)];
    hist.push_back(x);
    const bool stalled =
        detect_deadlock(hist, goal, heur_, dt_, goal_tolerance_, nearest_h, h_activation_);
    auto& until = rotate_until_[static_cast<std::size_t>(i)];
    if (stalled) until = t + heur_.trigger_window;
    return stalled || t <= until;
}

}  // namespace rsvo
