#ifndef RSVO_SVO_HPP
#define RSVO_SVO_HPP

#include "rsvo/errors.hpp"

namespace rsvo {

/// Global personality score. Non-negative; smaller means more egoistic.
struct PersonalityScore {
    double theta = 1.0;

    PersonalityScore() = default;
    explicit PersonalityScore(double t) : theta(t) {
        if (!(t >= 0.0))
            throw OutOfRangeError("personality score must be >= 0, got " + std::to_string(t));
    }
};

/// Pairwise-relative social value orientation, in radians within [0, pi/2].
/// phi < pi/4 reads egoistic, phi = pi/4 prosocial, phi > pi/4 altruistic.
struct Rsvo {
    double phi = 0.0;
};

/// Fraction of the pairwise safety bound an agent may consume. In [0, 1];
/// the two weights of a pair always sum to 1.
struct ResponsibilityWeight {
    double omega = 1.0;
};

/// phi_i = theta_i / (theta_i + theta_j) * pi/2.
/// Throws DegeneratePairError when both scores are zero.
Rsvo compute_rsvo(PersonalityScore theta_i, PersonalityScore theta_j);

/// omega = cos^2(phi). Monotone decreasing in phi: the more altruistic the
/// agent, the tighter its share of the safety bound.
/// Throws OutOfRangeError when phi lies outside [0, pi/2].
ResponsibilityWeight compute_weight(Rsvo phi);

/// compute_weight(compute_rsvo(theta_i, theta_j)) as a single call.
double responsibility_weight(double theta_i, double theta_j);

}  // namespace rsvo

#endif  // RSVO_SVO_HPP
