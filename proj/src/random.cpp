#include "mpsim/random.hpp"

#include <cmath>

#include "mpsim/error.hpp"

namespace mpsim {

namespace {

// SplitMix64 output mix (finalizer).
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::string_view stream_id) {
    const std::uint64_t h = fnv1a64(stream_id);
    state_ = mix64(seed + kGoldenGamma) ^ mix64(h);
    // Per-stream gamma must be odd; derived from both seed and stream id so
    // no two streams are phase-shifted copies of each other.
    gamma_ = mix64(h + mix64(seed ^ 0xDA942042E4DD58B5ULL)) | 1ULL;
}

std::uint64_t RandomStream::next_u64() {
    state_ += gamma_;
    return mix64(state_);
}

double RandomStream::uniform01() {
    // 53 random bits; +1 shifts the support from [0,1) to (0,1].
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::uniform01_half_open() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
    if (n == 0) {
        throw InvariantError("RandomStream::uniform_below: n must be > 0");
    }
    // Scaling via the 53-bit double is unbiased enough for the tiny n used
    // here (subflow counts); n never approaches 2^53.
    const double u = uniform01_half_open();
    return static_cast<std::uint64_t>(u * static_cast<double>(n));
}

double RandomStream::exponential(double rate_per_s) {
    if (!(rate_per_s > 0.0)) {
        throw ConfigError("RandomStream::exponential: rate must be > 0");
    }
    return -std::log(uniform01()) / rate_per_s;
}

}  // namespace mpsim
