// Synthetic workload generation and the cloudlet execution-time model.

#pragma once

#include <cstdint>
#include <vector>

#include "provsim/domain.hpp"

namespace provsim {

struct WorkloadParams {
    std::uint64_t num_cloudlets = 0;
    double mean_interarrival_s = 1.0;  // > 0
    double length_mi_min = 1000.0;     // > 0, min <= max
    double length_mi_max = 1000.0;
    double payload_mb_min = 0.0;  // >= 0, min <= max
    double payload_mb_max = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// num_cloudlets cloudlets with exponentially distributed interarrival gaps
// (first gap from time zero) and uniform lengths/payloads, fully determined
// by the seed. Ids are 0..n-1 in arrival order.
std::vector<Cloudlet> generate_workload(const WorkloadParams& params);

// Space-shared FIFO: one cloudlet at a time per VM at full capacity.
double cloudlet_runtime(const Cloudlet& cloudlet, const ResourceSpec& spec);

}  // namespace provsim
