#pragma once

#include <cmath>
#include <cstdint>

// Deterministic random number utilities. All simulation output must be a pure
// function of the seeds in the run plan, independent of thread count, so every
// stream is derived by hashing (seed, index...) rather than by splitting a
// shared generator.

namespace gs {

// splitmix64: used both as a hash mixer and to seed stream states.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Order-sensitive combine for deriving child seeds: hash_combine(seed, i, j, ...)
inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    return splitmix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}
template <typename... Rest>
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v, Rest... rest) {
    return hash_combine(hash_combine(seed, v), rest...);
}

// xoshiro256++ (Blackman & Vigna, public domain reference implementation).
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed = 0) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x = splitmix64(x);
            word = x;
        }
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

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller. Pairs are generated on demand; the spare
    // is cached so consecutive calls consume one Gaussian each.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Counter-based standard normal: the value is a pure function of (seed, a, b),
// so any coupling g_{ij} can be regenerated without storing the matrix.
inline double counter_gaussian(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t h1 = hash_combine(seed, a, b, 0);
    const std::uint64_t h2 = hash_combine(seed, a, b, 1);
    double u1 = static_cast<double>(h1 >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace gs
