#ifndef RSVO_DYNAMICS_HPP
#define RSVO_DYNAMICS_HPP

#include "rsvo/cbf.hpp"
#include "rsvo/svo.hpp"
#include "rsvo/vec2.hpp"

namespace rsvo {

struct AgentState {
    AgentId id = 0;
    Vec2 x;                   // position, m
    Vec2 v;                   // velocity, m/s (mirrors the control for single integrators)
    PersonalityScore theta;   // global personality score
    Vec2 goal;                // target position, m
};

enum class DynamicsKind { SingleIntegrator, DoubleIntegrator };

struct DynamicsModel {
    DynamicsKind kind = DynamicsKind::SingleIntegrator;
    double dt = 0.01;  // s

    void validate() const;
};

/// Explicit Euler for xdot = u: x += u*dt. The control doubles as the logged velocity.
AgentState step_single(const AgentState& state, Vec2 u, double dt);

/// Semi-implicit Euler for the double integrator: v += u*dt first, then x += v*dt.
AgentState step_double(const AgentState& state, Vec2 u, double dt);

}  // namespace rsvo

#endif  // RSVO_DYNAMICS_HPP
