#include "provsim/scoring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace provsim {

double reliability(const ReliabilityStats& stats) {
    const double s = static_cast<double>(stats.successes);
    const double f = static_cast<double>(stats.failures);
    return (s + 1.0) / (s + f + 2.0);
}

ReliabilityStats record_outcome(ReliabilityStats stats, bool success) {
    if (success)
        ++stats.successes;
    else
        ++stats.failures;
    return stats;
}

void ScoringParams::validate() const {
    if (!(beta > 0))
        throw std::invalid_argument("ScoringParams.beta: must be > 0");
    if (!(ema_alpha > 0) || !(ema_alpha <= 1))
        throw std::invalid_argument("ScoringParams.ema_alpha: must be in (0,1]");
}

ExecTimeEstimate initial_execution_estimate(const ResourceSpec& spec,
                                            double reference_cloudlet_mi) {
    if (!(reference_cloudlet_mi > 0))
        throw std::invalid_argument("reference_cloudlet_mi: must be > 0");
    ExecTimeEstimate est;
    est.et_seconds = reference_cloudlet_mi /
                     (static_cast<double>(spec.pe_count) * spec.mips_per_pe);
    est.observations = 0;
    return est;
}

ExecTimeEstimate record_execution_time(ExecTimeEstimate est, double observed_seconds,
                                       const ScoringParams& params) {
    if (!(observed_seconds > 0))
        throw std::invalid_argument("record_execution_time: observation must be > 0");
    est.et_seconds = params.ema_alpha * observed_seconds +
                     (1.0 - params.ema_alpha) * est.et_seconds;
    ++est.observations;
    return est;
}

double performance_factor(const ScoringParams& params, double r, double c, double et) {
    if (!(c > 0))
        throw std::invalid_argument("performance_factor: cost must be > 0");
    if (!(et > 0))
        throw std::invalid_argument("performance_factor: execution time must be > 0");
    assert(r > 0 && r < 1);
    return params.beta * r / (c * et);
}

double popularity_value(double et) {
    if (!(et > 0))
        throw std::invalid_argument("popularity_value: execution time must be > 0");
    return 1.0 / et;
}

std::vector<RankedCandidate> rank_candidates(std::vector<RankedCandidate> candidates) {
    if (candidates.empty())
        throw std::invalid_argument("rank_candidates: candidate list must be non-empty");
    std::sort(candidates.begin(), candidates.end(),
              [](const RankedCandidate& a, const RankedCandidate& b) {
                  if (a.pf != b.pf) return a.pf > b.pf;
                  if (a.pv != b.pv) return a.pv > b.pv;
                  return a.resource_id < b.resource_id;
              });
    return candidates;
}

}  // namespace provsim
