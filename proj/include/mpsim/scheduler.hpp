#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpsim/random.hpp"
#include "mpsim/time.hpp"

namespace mpsim::sched {

// What a scheduler is allowed to see about one subflow when placing a packet.
struct SubflowView {
    int index = 0;                           // 0-based position in the subflow list
    int queue_occupancy = 0;                 // packets waiting in the device queue
    std::optional<double> srtt_s;            // absent until the first RTT sample
    std::optional<double> service_estimate_s;  // absent until the first service sample
    bool cwnd_available = true;              // congestion window has room
    bool usable = true;                      // established and not masked off
};

enum class TieBreak { LowestIndex, HighestIndex };

// Score-minimizing choice over the usable views with window space.
// queue length x estimated service time; subflows without a service sample
// score with the mean estimate of the sampled subflows (1 s if none exist
// anywhere), which degrades the policy to join-shortest-queue at cold start.
// Returns nullopt when no view is eligible. HighestIndex tie-breaking exists
// only as a fault hook for the self-check suite.
std::optional<int> choose_queueaware(std::span<const SubflowView> views,
                                     TieBreak tie = TieBreak::LowestIndex);

// Lowest smoothed RTT among eligible views; a view with no SRTT sample
// compares as +infinity, so an all-unsampled field falls to the lowest index.
std::optional<int> choose_minsrtt(std::span<const SubflowView> views);

// Fewest queued packets among eligible views.
std::optional<int> choose_jsq(std::span<const SubflowView> views,
                              TieBreak tie = TieBreak::LowestIndex);

// Cycles through eligible views; `cursor` holds the index chosen last time
// (-1 before the first call) and is updated in place.
std::optional<int> choose_roundrobin(std::span<const SubflowView> views, int& cursor);

// Uniform choice among eligible views using the caller's stream.
std::optional<int> choose_random(std::span<const SubflowView> views, RandomStream& stream);

// Stateful per-connection scheduler. One instance per simulation run; the
// estimators feeding the views live in the protocol model, the scheduler
// only keeps whatever selection state its policy needs (cursor, RNG).
class Scheduler {
public:
    virtual ~Scheduler() = default;
    virtual std::optional<int> choose(std::span<const SubflowView> views, SimTime now) = 0;
    virtual std::string_view name() const = 0;
};

// queueaware | minsrtt | roundrobin | random | jsq. Unknown names throw
// ConfigError listing the valid ones. `seed` feeds the random policy's stream.
std::unique_ptr<Scheduler> make_scheduler(std::string_view name, std::uint64_t seed);

const std::vector<std::string>& scheduler_names();

}  // namespace mpsim::sched
