#include "rsvo/cbf.hpp"

#include "rsvo/errors.hpp"

namespace rsvo {

void CbfParams::validate() const {
    if (!(gamma >= 0.0)) throw ValidationError("cbf.gamma must be >= 0");
    if (!(r_safe > 0.0)) throw ValidationError("cbf.r_safe must be > 0");
    if (!(gamma2 >= 0.0)) throw ValidationError("cbf.gamma2 must be >= 0");
}

SafetyFunction safety_value(Vec2 x_i, Vec2 x_j, double r_safe) {
    const Vec2 d = x_i - x_j;
    SafetyFunction f;
    f.h_value = norm_sq(d) - r_safe * r_safe;
    f.grad_i = 2.0 * d;
    f.grad_j = -f.grad_i;
    return f;
}

SafetyConstraint first_order_constraint(Vec2 x_i, Vec2 x_j, ResponsibilityWeight omega_i,
                                        const CbfParams& params, AgentId id_i, AgentId id_j) {
    const SafetyFunction f = safety_value(x_i, x_j, params.r_safe);
    SafetyConstraint c;
    c.a_row = -2.0 * (x_i - x_j);
    c.b_rhs = omega_i.omega * (params.gamma * f.h_value);
    c.agent_i = id_i;
    c.agent_j = id_j;
    return c;
}

SafetyConstraint second_order_constraint(Vec2 x_i, Vec2 x_j, Vec2 v_i, Vec2 v_j,
                                         ResponsibilityWeight omega_i, const CbfParams& params,
                                         AgentId id_i, AgentId id_j) {
    const SafetyFunction f = safety_value(x_i, x_j, params.r_safe);
    const Vec2 dv = v_i - v_j;
    const double h_dot = dot(f.grad_i, dv);
    const double rhs = 2.0 * norm_sq(dv) + (params.gamma + params.gamma2) * h_dot +
                       params.gamma * params.gamma2 * f.h_value;
    SafetyConstraint c;
    c.a_row = -2.0 * (x_i - x_j);
    c.b_rhs = omega_i.omega * rhs;
    c.agent_i = id_i;
    c.agent_j = id_j;
    return c;
}

}  // namespace rsvo
