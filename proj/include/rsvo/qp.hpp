#ifndef RSVO_QP_HPP
#define RSVO_QP_HPP

#include <vector>

#include "rsvo/cbf.hpp"
#include "rsvo/vec2.hpp"

namespace rsvo {

/// Minimum-deviation program over one agent's 2-D control:
///   min ||u - u_nominal||^2   s.t.  u_min <= u <= u_max,  a_k . u <= b_k
struct QpProblem {
    Vec2 u_nominal;
    Vec2 u_min{-1e9, -1e9};
    Vec2 u_max{1e9, 1e9};
    std::vector<SafetyConstraint> rows;
};

enum class QpStatus { Optimal, Infeasible, RelaxedFeasible };

const char* to_string(QpStatus s);

struct QpSolution {
    Vec2 u_star;
    QpStatus status = QpStatus::Optimal;
    std::vector<int> active_set;  // indices into QpProblem::rows tight at u_star
    double slack_used = 0.0;
};

/// Feasibility tolerance: Optimal solutions satisfy every constraint within this.
inline constexpr double kQpFeasTol = 1e-9;

/// Euclidean projection of u_nominal onto the feasible polytope, computed by
/// exhaustive active-set enumeration (the problem has 2 variables, so at most
/// 2 independent constraints are active; all candidate sets are tried in index
/// order and the lowest-index set wins ties). Deterministic: identical inputs
/// give bit-identical outputs.
///
/// Returns status Infeasible when the polytope is empty (u_star is then the
/// box-clamped nominal). Degenerate rows are handled, never fatal: a zero
/// a_row with b_rhs >= 0 is vacuous, with b_rhs < 0 it makes the problem
/// infeasible.
QpSolution solve(const QpProblem& problem);

/// Infeasibility fallback. Solves the hard program first; only when its
/// polytope is empty does it solve
///   min ||u - u_nominal||^2 + slack_penalty * s^2
///   s.t. box bounds hard,  a_k . u <= b_k + s,  s >= 0
/// with one shared slack over the safety rows. Always returns a solution;
/// status is RelaxedFeasible when slack_used > kQpFeasTol.
QpSolution solve_relaxed(const QpProblem& problem, double slack_penalty);

}  // namespace rsvo

#endif  // RSVO_QP_HPP
