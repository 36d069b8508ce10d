#include "rsvo/svo.hpp"

#include <cmath>
#include <numbers>

namespace rsvo {

Rsvo compute_rsvo(PersonalityScore theta_i, PersonalityScore theta_j) {
    const double sum = theta_i.theta + theta_j.theta;
    if (!(sum > 0.0))
        throw DegeneratePairError("R-SVO undefined: theta_i + theta_j must be > 0");
    return Rsvo{theta_i.theta / sum * (std::numbers::pi / 2.0)};
}

ResponsibilityWeight compute_weight(Rsvo phi) {
    if (!(phi.phi >= 0.0 && phi.phi <= std::numbers::pi / 2.0))
        throw OutOfRangeError("R-SVO angle outside [0, pi/2]: " + std::to_string(phi.phi));
    const double c = std::cos(phi.phi);
    return ResponsibilityWeight{c * c};
}

double responsibility_weight(double theta_i, double theta_j) {
    return compute_weight(compute_rsvo(PersonalityScore{theta_i}, PersonalityScore{theta_j})).omega;
}

}  // namespace rsvo
