// Per-resource reliability and execution-time history, and the two ranking
// quantities derived from them: the performance factor PF = beta * R / (C * E_T)
// and the popularity value PV = 1 / E_T.

#pragma once

#include <cstdint>
#include <vector>

#include "provsim/domain.hpp"

namespace provsim {

// Monotone success/failure ledger for one resource.
struct ReliabilityStats {
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
};

// Laplace-smoothed success rate, strictly inside (0,1): a never-observed
// resource scores a neutral 0.5.
double reliability(const ReliabilityStats& stats);

ReliabilityStats record_outcome(ReliabilityStats stats, bool success);

// Exponential-moving-average estimate of per-task execution time.
struct ExecTimeEstimate {
    double et_seconds = 1.0;  // always > 0
    std::uint64_t observations = 0;
};

struct ScoringParams {
    double beta = 1.0;       // performance factor coefficient, > 0
    double ema_alpha = 0.3;  // EMA smoothing, in (0,1]

    void validate() const;
};

// Seed estimate for a never-observed resource: time the resource would need
// for a reference-sized cloudlet at full capacity.
ExecTimeEstimate initial_execution_estimate(const ResourceSpec& spec,
                                            double reference_cloudlet_mi);

// et <- alpha * observed + (1 - alpha) * et. Rejects observed <= 0.
ExecTimeEstimate record_execution_time(ExecTimeEstimate est, double observed_seconds,
                                       const ScoringParams& params);

// PF = beta * r / (c * et). Rejects c <= 0 and et <= 0.
double performance_factor(const ScoringParams& params, double r, double c, double et);

// PV = 1 / et with the proportionality constant fixed at 1. Rejects et <= 0.
double popularity_value(double et);

struct RankedCandidate {
    ResourceId resource_id;
    double pf = 0.0;
    double pv = 0.0;
};

// Sorts by PF descending, ties by PV descending, remaining ties by
// resource_id ascending. Rejects an empty list.
std::vector<RankedCandidate> rank_candidates(std::vector<RankedCandidate> candidates);

}  // namespace provsim
