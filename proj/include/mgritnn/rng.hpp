#ifndef MGRITNN_RNG_HPP
#define MGRITNN_RNG_HPP

#include <cstdint>

namespace mgritnn {

/** Portable deterministic generator (xorshift64* with splitmix64 seeding).
 *
 * The sequence is fully pinned so that runs are reproducible across
 * platforms and implementations:
 *   - state_0 = splitmix64(seed):
 *       z = seed + 0x9E3779B97F4A7C15
 *       z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *       z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *       state_0 = z ^ (z >> 31)     (if 0, replaced by 0x9E3779B97F4A7C15)
 *   - each draw: s ^= s >> 12; s ^= s << 25; s ^= s >> 27;
 *       output = s * 0x2545F4914F6CDD1D
 *   - next_double() = (output >> 11) * 2^-53, uniform in [0,1).
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next_u64() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0,1) with 53 bits of mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound > 0. Uses rejection to stay unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

} // namespace mgritnn

#endif
