#ifndef RSVO_CBF_HPP
#define RSVO_CBF_HPP

#include <cstdint>

#include "rsvo/svo.hpp"
#include "rsvo/vec2.hpp"

namespace rsvo {

using AgentId = std::int32_t;

/// Barrier parameters. gamma is the class-K slope of the first-order
/// condition hdot + gamma*h >= 0; gamma2 is the second slope used by the
/// double-integrator extension hddot + (gamma+gamma2)*hdot + gamma*gamma2*h >= 0.
struct CbfParams {
    double gamma = 1.0;    // 1/s
    double r_safe = 1.0;   // m
    double gamma2 = 1.0;   // 1/s

    void validate() const;
};

/// Pairwise safety function h = ||x_i - x_j||^2 - r_safe^2 and its gradients.
/// h may be negative; callers decide what an unsafe state means.
struct SafetyFunction {
    double h_value = 0.0;  // m^2
    Vec2 grad_i;           // dh/dx_i = 2 (x_i - x_j)
    Vec2 grad_j;           // dh/dx_j = -grad_i
};

/// One linear inequality a_row . u_i <= b_rhs over agent i's control.
/// b_rhs already carries the responsibility weight.
struct SafetyConstraint {
    Vec2 a_row;
    double b_rhs = 0.0;
    AgentId agent_i = -1;
    AgentId agent_j = -1;
};

SafetyFunction safety_value(Vec2 x_i, Vec2 x_j, double r_safe);

/// Single-integrator constraint row: a = -2(x_i - x_j), b = omega_i * gamma * h.
SafetyConstraint first_order_constraint(Vec2 x_i, Vec2 x_j, ResponsibilityWeight omega_i,
                                        const CbfParams& params,
                                        AgentId id_i = -1, AgentId id_j = -1);

/// Double-integrator constraint row over the acceleration input, from the
/// two-slope condition hddot + (gamma+gamma2)*hdot + gamma*gamma2*h >= 0 with
/// every state-dependent right-hand term split by omega_i:
///   a = -2(x_i - x_j)
///   b = omega_i * [ 2||v_i - v_j||^2 + (gamma+gamma2)*hdot + gamma*gamma2*h ]
/// where hdot = 2(x_i - x_j).(v_i - v_j).
SafetyConstraint second_order_constraint(Vec2 x_i, Vec2 x_j, Vec2 v_i, Vec2 v_j,
                                         ResponsibilityWeight omega_i, const CbfParams& params,
                                         AgentId id_i = -1, AgentId id_j = -1);

}  // namespace rsvo

#endif  // RSVO_CBF_HPP
