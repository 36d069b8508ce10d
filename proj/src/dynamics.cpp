#include "rsvo/dynamics.hpp"

#include "rsvo/errors.hpp"

namespace rsvo {

void DynamicsModel::validate() const {
    if (!(dt > 0.0)) throw ValidationError("dynamics.dt must be > 0");
}

AgentState step_single(const AgentState& state, Vec2 u, double dt) {
    AgentState next = state;
    next.x = state.x + u * dt;
    next.v = u;
    return next;
}

AgentState step_double(const AgentState& state, Vec2 u, double dt) {
    AgentState next = state;
    next.v = state.v + u * dt;
    next.x = state.x + next.v * dt;
    return next;
}

}  // namespace rsvo
