#pragma once

#include <cstdint>

namespace meshflow {

/// splitmix64 output for a given state; advances the state.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// The (index+1)-th splitmix64 output from `seed`, without shared state.
/// Used to derive independent sub-seeds (generator retries, experiment trials).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256** seeded via splitmix64. Fixed, portable bit-for-bit across
/// platforms, so generated topologies reproduce exactly from a seed.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_unit();

    /// Unbiased uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform integer in [lo, hi], inclusive.
    int next_int(int lo, int hi);

private:
    std::uint64_t state_[4];
};

}  // namespace meshflow
