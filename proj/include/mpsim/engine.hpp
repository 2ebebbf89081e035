#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mpsim/event.hpp"
#include "mpsim/time.hpp"

namespace mpsim {

// Single-threaded discrete-event engine: a virtual clock plus an ordered
// future-event set. Events with equal fire times dispatch in scheduling
// order (sequence number), which makes same-tick races reproducible.
class Engine {
public:
    using Action = std::function<void()>;

    SimTime now() const { return now_; }

    // Schedules an action at absolute time `at` (>= now, else InvariantError).
    // Returns the event's sequence number.
    std::uint64_t schedule_at(SimTime at, EventKind kind, Action action);

    std::uint64_t schedule_after(std::int64_t delay_ns, EventKind kind, Action action) {
        return schedule_at(now_ + delay_ns, kind, std::move(action));
    }

    // Dispatches every event with fire_at <= end in (fire_at, sequence_no)
    // order, then advances the clock to `end`. Returns the dispatch counts
    // for this call. request_stop() ends the loop early with the clock left
    // at the last dispatched event.
    SimStats run_until(SimTime end);

    void request_stop() { stop_requested_ = true; }

    std::size_t pending_events() const { return heap_.size(); }

    // Dispatch logging is off by default; runs that need a determinism
    // witness switch it on before scheduling anything.
    void enable_dispatch_log(bool on) { log_enabled_ = on; }
    const std::vector<DispatchRecord>& dispatch_log() const { return log_; }

private:
    struct Scheduled {
        SimTime at;
        std::uint64_t seq;
        EventKind kind;
        Action action;
    };

    // Min-heap on (at, seq) via std::push_heap/pop_heap with inverted compare.
    static bool later(const Scheduled& a, const Scheduled& b) {
        if (a.at != b.at) return b.at < a.at;
        return b.seq < a.seq;
    }

    std::vector<Scheduled> heap_;
    SimTime now_ = SimTime::zero();
    std::uint64_t next_seq_ = 0;
    bool stop_requested_ = false;
    bool log_enabled_ = false;
    std::vector<DispatchRecord> log_;
};

}  // namespace mpsim
