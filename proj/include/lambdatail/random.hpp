#pragma once

#include <cstdint>
#include <random>

namespace lambdatail {

struct Seed {
    std::uint64_t value = 0;

    constexpr Seed() = default;
    constexpr explicit Seed(std::uint64_t v) : value(v) {}
    friend constexpr bool operator==(Seed, Seed) = default;
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit integers.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Sub-seed for replication `index` of a run seeded with `seed`:
//   splitmix64(seed XOR splitmix64(index))
// Used for every Monte Carlo replication and bootstrap draw so results do not
// depend on execution order or thread count.
constexpr Seed derive_seed(Seed seed, std::uint64_t index) noexcept {
    return Seed{splitmix64(seed.value ^ splitmix64(index))};
}

// Uniform stream on the open interval (0,1).
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
// Each 64-bit word w maps to ((w >> 11) + 0.5) * 2^-53, so every draw is a
// dyadic midpoint strictly inside (0,1) and the mapping is platform independent
// (std::uniform_real_distribution is not).
class UniformStream {
public:
    explicit UniformStream(Seed seed) : engine_(seed.value) {}

    double next() noexcept {
        constexpr double scale = 0x1.0p-53;
        return (static_cast<double>(engine_() >> 11) + 0.5) * scale;
    }

    double operator()() noexcept { return next(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace lambdatail
