#include "mpsim/estimators.hpp"

#include "mpsim/error.hpp"

namespace mpsim::sched {

double update_service_estimate(std::optional<double> current_s, double sample_s, double alpha) {
    if (sample_s < 0.0) {
        throw InvariantError("update_service_estimate: negative service sample");
    }
    if (!current_s.has_value()) {
        return sample_s;
    }
    return alpha * *current_s + (1.0 - alpha) * sample_s;
}

double update_srtt(std::optional<double> current_s, double rtt_sample_s, double srtt_gain) {
    if (!(rtt_sample_s > 0.0)) {
        throw InvariantError("update_srtt: nonpositive RTT sample");
    }
    if (!current_s.has_value()) {
        return rtt_sample_s;
    }
    return (1.0 - srtt_gain) * *current_s + srtt_gain * rtt_sample_s;
}

}  // namespace mpsim::sched
