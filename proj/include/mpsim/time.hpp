#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace mpsim {

// Simulation time as a point on an integer nanosecond clock. Integer time
// keeps event ordering identical across platforms; durations are plain
// int64_t nanosecond counts.
struct SimTime {
    std::int64_t ns = 0;

    static constexpr SimTime zero() { return SimTime{0}; }

    static SimTime from_seconds(double s) {
        return SimTime{static_cast<std::int64_t>(std::llround(s * 1e9))};
    }

    double to_seconds() const { return static_cast<double>(ns) * 1e-9; }

    auto operator<=>(const SimTime&) const = default;

    SimTime operator+(std::int64_t delta_ns) const { return SimTime{ns + delta_ns}; }
    SimTime& operator+=(std::int64_t delta_ns) {
        ns += delta_ns;
        return *this;
    }
    std::int64_t operator-(const SimTime& other) const { return ns - other.ns; }
};

inline std::int64_t seconds_to_ns(double s) {
    return static_cast<std::int64_t>(std::llround(s * 1e9));
}

}  // namespace mpsim
