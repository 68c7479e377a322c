#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

#include "matformer/errors.hpp"

namespace matformer {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Deterministic splitmix-driven PRNG. All randomness in the project flows
/// from one master seed through named substreams, so a run is fully
/// determined by (seed, code). Substreams derive from the construction seed,
/// not the current state, so derivation order does not matter.
class Rng {
  public:
    explicit Rng(uint64_t seed)
        : seed_(seed), state_(splitmix64(seed ^ 0xa02bdbf7bb3c0a7ull)) {}

    Rng substream(std::string_view name) const {
        return Rng(seed_ ^ splitmix64(fnv1a64(name)));
    }

    uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    int uniform_int(int n) {
        if (n <= 0) throw IndexError("uniform_int: n must be positive");
        return static_cast<int>(uniform() * n);
    }

    /// Standard normal via Box-Muller; generates pairs, hands out one at a time.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        const double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Index sampled from an (already validated) probability vector.
    int discrete(std::span<const double> probs) {
        const double u = uniform();
        double acc = 0.0;
        for (size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

  private:
    uint64_t seed_;
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace matformer
