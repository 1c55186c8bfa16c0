#include "provsim/workload.hpp"

#include <stdexcept>

#include "provsim/rng.hpp"

namespace provsim {

void WorkloadParams::validate() const {
    if (!(mean_interarrival_s > 0))
        throw std::invalid_argument("WorkloadParams.mean_interarrival_s: must be > 0");
    if (!(length_mi_min > 0))
        throw std::invalid_argument("WorkloadParams.length_mi_min: must be > 0");
    if (length_mi_min > length_mi_max)
        throw std::invalid_argument("WorkloadParams.length_mi_min: must be <= length_mi_max");
    if (!(payload_mb_min >= 0))
        throw std::invalid_argument("WorkloadParams.payload_mb_min: must be >= 0");
    if (payload_mb_min > payload_mb_max)
        throw std::invalid_argument("WorkloadParams.payload_mb_min: must be <= payload_mb_max");
}

std::vector<Cloudlet> generate_workload(const WorkloadParams& params) {
    params.validate();
    std::mt19937_64 rng = make_stream(params.seed, "workload");
    std::vector<Cloudlet> cloudlets;
    cloudlets.reserve(params.num_cloudlets);
    double clock = 0.0;
    for (std::uint64_t i = 0; i < params.num_cloudlets; ++i) {
        clock += exponential(rng, params.mean_interarrival_s);
        Cloudlet c;
        c.cloudlet_id = i;
        c.length_mi = uniform_double(rng, params.length_mi_min, params.length_mi_max);
        c.payload_mb = uniform_double(rng, params.payload_mb_min, params.payload_mb_max);
        c.arrival_time = clock;
        c.validate();
        cloudlets.push_back(c);
    }
    return cloudlets;
}

double cloudlet_runtime(const Cloudlet& cloudlet, const ResourceSpec& spec) {
    return cloudlet.length_mi /
           (static_cast<double>(spec.pe_count) * spec.mips_per_pe);
}

}  // namespace provsim
