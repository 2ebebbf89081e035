#pragma once

#include <optional>

#include "mpsim/time.hpp"

namespace mpsim::sched {

// Smoothing weights for the two path estimators. alpha weights the previous
// service-time estimate (new = alpha*old + (1-alpha)*sample); srtt_gain
// weights the new RTT sample (new = (1-g)*old + g*sample, classic TCP g=1/8).
struct EwmaConfig {
    double alpha = 0.8;
    double srtt_gain = 1.0 / 8.0;
};

// Service-time EWMA. A missing `current` means no sample has been seen yet,
// in which case the estimate initializes to the sample itself.
// sample_s < 0 indicates a timestamp-ordering bug upstream and throws.
double update_service_estimate(std::optional<double> current_s, double sample_s, double alpha);

// Smoothed RTT. First sample initializes; later samples blend with gain g.
// Nonpositive samples throw.
double update_srtt(std::optional<double> current_s, double rtt_sample_s, double srtt_gain);

// Sender-side clock points of one packet's journey. The service time starts
// when the packet enters the NIC and ends at the ACK; time before the NIC is
// queueing wait.
struct PacketTimestamps {
    SimTime assigned;    // scheduler handed the packet to a subflow
    SimTime enter_nic;   // serialization onto the link began
    SimTime acked;       // ACK reached the sender

    double rtt_s() const { return static_cast<double>(acked - assigned) * 1e-9; }
    double wait_s() const { return static_cast<double>(enter_nic - assigned) * 1e-9; }
    double service_s() const { return static_cast<double>(acked - enter_nic) * 1e-9; }
};

}  // namespace mpsim::sched
