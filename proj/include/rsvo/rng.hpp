#ifndef RSVO_RNG_HPP
#define RSVO_RNG_HPP

#include <cstdint>
#include <vector>

namespace rsvo {

/// splitmix64 (Steele, Lea, Vigna; public-domain constants). Chosen over the
/// standard distributions so that seeded streams are bit-identical on every
/// platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::uint64_t state_;
};

/// Draws n personality scores uniformly from [lo, hi), redrawing any value
/// that lands within 1e-9 of an earlier one so no two scores repeat.
std::vector<double> draw_thetas(std::uint64_t seed, int n, double lo, double hi);

}  // namespace rsvo

#endif  // RSVO_RNG_HPP
