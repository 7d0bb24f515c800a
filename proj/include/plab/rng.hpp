#pragma once

#include <cstdint>
#include <random>

namespace plab {

// Counter-based splitmix64. All randomness in the artifact is derived from a
// (seed, stream) pair, so any trial can be replayed bit-exactly and parallel
// workers never share generator state.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits; bit-exact across platforms,
    // unlike std::uniform_real_distribution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

// Resolves the seed convention: 0 requests fresh entropy, anything else is
// used verbatim so runs replay.
inline std::uint64_t resolve_seed(std::uint64_t requested) {
    if (requested != 0) return requested;
    std::random_device rd;
    std::uint64_t hi = rd(), lo = rd();
    std::uint64_t s = (hi << 32) ^ lo;
    return s == 0 ? 0x9e3779b97f4a7c15ULL : s;
}

}  // namespace plab
