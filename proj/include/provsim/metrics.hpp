// Per-run metrics and their CSV serialization.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace provsim {

struct MetricsRecord {
    std::uint64_t run_id = 0;
    std::string policy;
    std::uint64_t seed = 0;
    double total_cost = 0.0;                // sum of acquisition cost factors
    double mean_cost_per_cloudlet = 0.0;
    double makespan_s = 0.0;                // first arrival to last completion
    double mean_cloudlet_turnaround_s = 0.0;
    std::uint64_t vm_creations = 0;
    std::uint64_t vm_deletions = 0;         // load-triggered evictions
    std::uint64_t acquisitions = 0;
    std::uint64_t cloudlets_completed = 0;
    double mean_pf_of_grants = 0.0;
};

// Exact header row, field names in declaration order.
std::string metrics_header();

std::string format_metrics_row(const MetricsRecord& record);

// Header plus one row per record, rows ordered by run_id ascending.
// Decimal values carry 6 fractional digits.
std::string write_metrics(std::vector<MetricsRecord> records);

// Inverse of write_metrics (also accepts a header-only document).
std::vector<MetricsRecord> parse_metrics(const std::string& text);

}  // namespace provsim
