#pragma once

#include <array>
#include <cstdint>

#include "simerr/normal.hpp"

namespace simerr {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

// Seed-splitting rule used everywhere independent streams are needed:
// mix a parent seed with a stream index through one splitmix64 round.
// Replications, MVN shift stages and CLI subtasks each derive their own
// stream; there is no global RNG state anywhere in the library.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
    std::uint64_t s = parent ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL));
    return detail::splitmix64(s);
}

// xoshiro256++ seeded through splitmix64.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    static Rng derived(std::uint64_t parent, std::uint64_t stream) {
        return Rng(derive_seed(parent, stream));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1); never returns an endpoint, so it
    // is safe to feed straight into std_normal_quantile.
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal by inversion; keeps every draw a pure function of
    // the stream position.
    double normal() { return std_normal_quantile(uniform()); }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace simerr
