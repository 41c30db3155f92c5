#ifndef MVF_RNG_HPP
#define MVF_RNG_HPP

#include <cstdint>

#include "mvf/geometry.hpp"

namespace mvf {

// Counter-based random streams: stream(seed, index) is a pure function of
// its two arguments, so trajectories can be generated in any order (or in
// parallel) and still reproduce bitwise. The generator is splitmix64, which
// is more than enough for rejection sampling in a ball.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t index) {
        // Decorrelate the (seed, index) pair before using it as a state.
        state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
        state_ = mix(state_ ^ mix(index + 0xbf58476d1ce4e5b9ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_ = 0;
};

// Uniform point in the closed ball of radius eps, by rejection from the
// bounding cube. Acceptance ratio is >= pi/6 for n <= 3.
inline Vec sample_ball(RandomStream& rs, int n, double eps) {
    while (true) {
        Vec y(n);
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] = rs.next_symmetric();
            r2 += y[i] * y[i];
        }
        if (r2 <= 1.0) {
            y *= eps;
            return y;
        }
    }
}

}  // namespace mvf

#endif
