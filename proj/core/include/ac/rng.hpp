#pragma once

#include <cstdint>
#include <random>

namespace ac {

// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-purpose seed derivation. Every random stream in a run
// (topology build, initial states, link sampling, failure draws) gets its
// own derived seed so schemes can be compared under common random numbers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::uint64_t kStreamTopology = 1;
inline constexpr std::uint64_t kStreamInit = 2;
inline constexpr std::uint64_t kStreamSelect = 3;
inline constexpr std::uint64_t kStreamFail = 4;

// Seed for replicate i of a sweep, derived from the master seed.
std::uint64_t replicate_seed(std::uint64_t seed, int replicate);

// mt19937_64 wrapper with explicit double generation so that sequences are
// reproducible bit-for-bit for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal via the polar method
    double normal();

    bool bernoulli(double p) { return uniform01() < p; }

    // uniform integer in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ac
