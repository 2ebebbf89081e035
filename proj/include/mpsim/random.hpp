#pragma once

#include <cstdint>
#include <string_view>

namespace mpsim {

// Deterministic named-substream PRNG.
//
// The generator is SplitMix64 (Steele, Lea, Flood: "Fast Splittable
// Pseudorandom Number Generators") with a per-stream odd gamma, so distinct
// (seed, stream_id) pairs walk unrelated sequences. The same pair produces
// bit-identical draws on every platform; golden values in the tests and the
// README depend on this exact algorithm, so it must not change.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::string_view stream_id);

    std::uint64_t next_u64();

    // Uniform on (0,1]; the upper bound is reachable so that
    // -log(u) can be exactly zero.
    double uniform01();

    // Uniform on [0,1).
    double uniform01_half_open();

    // Uniform integer in [0, n); n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    // Exponential variate: -ln(U)/rate with U in (0,1]. rate must be > 0
    // (events per second when used as an inter-arrival time).
    double exponential(double rate_per_s);

private:
    std::uint64_t state_;
    std::uint64_t gamma_;
};

}  // namespace mpsim
