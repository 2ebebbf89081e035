#include "mpsim/engine.hpp"

#include <algorithm>
#include <string>

#include "mpsim/error.hpp"

namespace mpsim {

std::uint64_t Engine::schedule_at(SimTime at, EventKind kind, Action action) {
    if (at < now_) {
        throw InvariantError("schedule: event in past (fire_at=" + std::to_string(at.ns) +
                             "ns, clock=" + std::to_string(now_.ns) + "ns)");
    }
    const std::uint64_t seq = next_seq_++;
    heap_.push_back(Scheduled{at, seq, kind, std::move(action)});
    std::push_heap(heap_.begin(), heap_.end(), later);
    return seq;
}

SimStats Engine::run_until(SimTime end) {
    SimStats stats;
    stop_requested_ = false;
    while (!heap_.empty() && heap_.front().at <= end) {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        Scheduled ev = std::move(heap_.back());
        heap_.pop_back();

        now_ = ev.at;
        if (log_enabled_) {
            log_.push_back(DispatchRecord{ev.at, ev.seq, ev.kind});
        }
        ++stats.dispatched;
        ++stats.by_kind[static_cast<std::size_t>(ev.kind)];
        ev.action();

        if (stop_requested_) {
            return stats;
        }
    }
    now_ = std::max(now_, end);
    return stats;
}

}  // namespace mpsim
