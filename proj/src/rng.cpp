#include "rsvo/rng.hpp"

#include <cmath>

#include "rsvo/errors.hpp"

namespace rsvo {

std::vector<double> draw_thetas(std::uint64_t seed, int n, double lo, double hi) {
    if (n < 1) throw ValidationError("theta draw count must be >= 1");
    if (!(lo < hi)) throw ValidationError("theta range must satisfy lo < hi");
    if (!(lo >= 0.0)) throw ValidationError("theta range must be non-negative");
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    while (out.size() < static_cast<std::size_t>(n)) {
        const double candidate = rng.next_in(lo, hi);
        bool repeated = false;
        for (double prev : out)
            if (std::abs(candidate - prev) < 1e-9) { repeated = true; break; }
        if (!repeated) out.push_back(candidate);
    }
    return out;
}

}  // namespace rsvo
