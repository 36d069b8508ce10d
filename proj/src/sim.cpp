#include "rsvo/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rsvo/errors.hpp"
#include "rsvo/log.hpp"
#include "rsvo/svo.hpp"

namespace rsvo {
namespace {

bool all_at_goal(const std::vector<AgentState>& agents, double tol) {
    for (const auto& a : agents)
        if (norm(a.x - a.goal) > tol) return false;
    return true;
}

double pair_weight(const SimConfig& config, const AgentState& self, const AgentState& other) {
    if (config.symmetric_mode) return 0.5;
    return responsibility_weight(self.theta.theta, other.theta.theta);
}

SafetyConstraint pair_constraint(const SimConfig& config, const AgentState& self,
                                 const AgentState& other, double omega) {
    if (config.dynamics.kind == DynamicsKind::SingleIntegrator)
        return first_order_constraint(self.x, other.x, ResponsibilityWeight{omega}, config.cbf,
                                      self.id, other.id);
    return second_order_constraint(self.x, other.x, self.v, other.v, ResponsibilityWeight{omega},
                                   config.cbf, self.id, other.id);
}

}  // namespace

void SimConfig::validate() const {
    dynamics.validate();
    cbf.validate();
    controller.validate();
    heuristic.validate();
    if (!(u_min.x <= u_max.x && u_min.y <= u_max.y))
        throw ValidationError("u_min must be <= u_max componentwise");
    if (max_steps <= 0) throw ValidationError("max_steps must be > 0");
    if (!(goal_tolerance > 0.0)) throw ValidationError("goal_tolerance must be > 0");
    if (!(slack_penalty > 0.0)) throw ValidationError("slack_penalty must be > 0");
}

TrajectoryLog run(const SimConfig& config, std::vector<AgentState> agents) {
    config.validate();
    const int n = static_cast<int>(agents.size());
    if (n < 1) throw ValidationError("at least one agent is required");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double h = safety_value(agents[i].x, agents[j].x, config.cbf.r_safe).h_value;
            if (h < 0.0)
                throw UnsafeStartError("initial pair (" + std::to_string(agents[i].id) + "," +
                                       std::to_string(agents[j].id) +
                                       ") violates the safety set: h = " + std::to_string(h));
        }

    TrajectoryLog log;
    log.num_agents = n;
    log.dt = config.dynamics.dt;

    const double h_activation = config.cbf.gamma * config.cbf.r_safe * config.cbf.r_safe;
    std::vector<std::vector<Vec2>> history(static_cast<std::size_t>(n));
    std::vector<int> rotate_until(static_cast<std::size_t>(n), -1);

    if (all_at_goal(agents, config.goal_tolerance)) {
        log.completion_step = 0;
        log.final_states = std::move(agents);
        return log;
    }

    std::vector<AgentState> next(agents.size());
    for (int t = 0; t < config.max_steps; ++t) {
        StepRecord rec;
        rec.step = t;
        rec.agents.resize(agents.size());
        for (int i = 0; i < n; ++i) history[static_cast<std::size_t>(i)].push_back(agents[static_cast<std::size_t>(i)].x);

        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto& ai = agents[static_cast<std::size_t>(i)];
                const auto& aj = agents[static_cast<std::size_t>(j)];
                PairRecord pr;
                pr.i = ai.id;
                pr.j = aj.id;
                pr.h = safety_value(ai.x, aj.x, config.cbf.r_safe).h_value;
                pr.dist = norm(ai.x - aj.x);
                pr.omega_i = pair_weight(config, ai, aj);
                pr.omega_j = pair_weight(config, aj, ai);
                rec.pairs.push_back(pr);
            }

        // Decentralized inner loop: each agent reads only the step-start
        // snapshot of positions/velocities, never another agent's control.
        for (int i = 0; i < n; ++i) {
            const auto& self = agents[static_cast<std::size_t>(i)];
            QpProblem qp;
            qp.u_min = config.u_min;
            qp.u_max = config.u_max;

            double nearest_h = std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const auto& other = agents[static_cast<std::size_t>(j)];
                const double omega = pair_weight(config, self, other);
                qp.rows.push_back(pair_constraint(config, self, other, omega));
                nearest_h = std::min(nearest_h,
                                     safety_value(self.x, other.x, config.cbf.r_safe).h_value);
            }

            const bool stalled = detect_deadlock(history[static_cast<std::size_t>(i)], self.goal,
                                                 config.heuristic, config.dynamics.dt,
                                                 config.goal_tolerance, nearest_h, h_activation);
            if (stalled) rotate_until[static_cast<std::size_t>(i)] = t + config.heuristic.trigger_window;
            const bool deadlocked = stalled || t <= rotate_until[static_cast<std::size_t>(i)];

            const Vec2 u_task = nominal_control(self, config.controller);
            qp.u_nominal = apply_deadlock_heuristic(u_task, config.heuristic, deadlocked);

            QpSolution sol;
            if (config.relax_infeasible) {
                sol = solve_relaxed(qp, config.slack_penalty);
            } else {
                sol = solve(qp);
                if (sol.status == QpStatus::Infeasible)
                    throw InfeasibleError("QP infeasible for agent " + std::to_string(self.id) +
                                          " at step " + std::to_string(t));
            }
            if (sol.slack_used > kQpFeasTol) {
                ++log.slack_events;
                log_message(LogLevel::Warn, "safety slack %.3e used by agent %d at step %d",
                            sol.slack_used, static_cast<int>(self.id), t);
            }

            auto& ar = rec.agents[static_cast<std::size_t>(i)];
            ar.id = self.id;
            ar.x = self.x;
            ar.v = self.v;
            ar.u_nominal = qp.u_nominal;
            ar.u_star = sol.u_star;
            ar.qp_status = sol.status;
            ar.slack = sol.slack_used;
            ar.deadlocked = deadlocked;

            next[static_cast<std::size_t>(i)] =
                config.dynamics.kind == DynamicsKind::SingleIntegrator
                    ? step_single(self, sol.u_star, config.dynamics.dt)
                    : step_double(self, sol.u_star, config.dynamics.dt);
        }

        agents.swap(next);
        log.steps.push_back(std::move(rec));

        if (all_at_goal(agents, config.goal_tolerance)) {
            log.completion_step = t + 1;
            break;
        }
    }

    log.final_states = std::move(agents);
    return log;
}

Metrics compute_metrics(const TrajectoryLog& log, double r_safe) {
    if (log.steps.empty() && log.final_states.empty())
        throw ValidationError("cannot compute metrics from an empty log");

    Metrics m;
    m.completion_step = log.completion_step;
    m.completion_time_s = log.completion_step >= 0 ? log.completion_step * log.dt : -1.0;

    m.min_pairwise_distance.reserve(log.steps.size());
    for (const auto& step : log.steps) {
        if (step.pairs.empty()) continue;
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& p : step.pairs) lo = std::min(lo, p.dist);
        m.min_pairwise_distance.push_back(lo);
    }
    m.avg_min_distance = m.min_pairwise_distance;

    for (const auto& step : log.steps) {
        bool any = false;
        for (const auto& a : step.agents) any = any || a.deadlocked;
        if (any) {
            if (m.deadlock_start_step < 0) m.deadlock_start_step = step.step;
            m.deadlock_end_step = step.step;
        }
    }

    m.path_lengths.assign(static_cast<std::size_t>(log.num_agents), 0.0);
    for (std::size_t t = 0; t < log.steps.size(); ++t) {
        const auto& cur = log.steps[t].agents;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const Vec2 nxt = t + 1 < log.steps.size() ? log.steps[t + 1].agents[i].x
                                                      : log.final_states[i].x;
            m.path_lengths[i] += norm(nxt - cur[i].x);
        }
    }

    for (double d : m.min_pairwise_distance)
        m.worst_boundary_incursion = std::max(m.worst_boundary_incursion, r_safe - d);
    m.worst_boundary_incursion = std::max(0.0, m.worst_boundary_incursion);
    return m;
}

double boundary_allowance(double dt) {
    // Calibrated once against the worst preset incursion and pinned; scales
    // linearly with dt like the first-order integration error it covers.
    return 2.0 * dt;
}

}  // namespace rsvo
