#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "mpsim/time.hpp"

namespace mpsim {

enum class EventKind : std::uint8_t {
    Arrival = 0,
    TransmitComplete,
    AckArrival,
    LossTimer,
    MeasurementTick,
};

inline constexpr std::size_t kEventKindCount = 5;

inline std::string_view event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Arrival: return "arrival";
        case EventKind::TransmitComplete: return "transmission-complete";
        case EventKind::AckArrival: return "ack-arrival";
        case EventKind::LossTimer: return "loss-timer";
        case EventKind::MeasurementTick: return "measurement-tick";
    }
    return "unknown";
}

// Counts of events dispatched by one run_until() call.
struct SimStats {
    std::uint64_t dispatched = 0;
    std::array<std::uint64_t, kEventKindCount> by_kind{};

    std::uint64_t count(EventKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
};

// One line of the dispatch log: what fired and when. The log of a run is a
// determinism witness — two runs of the same (scenario, seed) must produce
// identical logs.
struct DispatchRecord {
    SimTime at;
    std::uint64_t sequence_no = 0;
    EventKind kind = EventKind::Arrival;

    bool operator==(const DispatchRecord&) const = default;
};

}  // namespace mpsim
