#include "provsim/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace provsim {

namespace {

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == sep) {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

}  // namespace

std::string metrics_header() {
    return "run_id,policy,seed,total_cost,mean_cost_per_cloudlet,makespan_s,"
           "mean_cloudlet_turnaround_s,vm_creations,vm_deletions,acquisitions,"
           "cloudlets_completed,mean_pf_of_grants";
}

std::string format_metrics_row(const MetricsRecord& r) {
    std::string row;
    row += std::to_string(r.run_id);
    row += ',';
    row += r.policy;
    row += ',';
    row += std::to_string(r.seed);
    row += ',';
    row += fixed6(r.total_cost);
    row += ',';
    row += fixed6(r.mean_cost_per_cloudlet);
    row += ',';
    row += fixed6(r.makespan_s);
    row += ',';
    row += fixed6(r.mean_cloudlet_turnaround_s);
    row += ',';
    row += std::to_string(r.vm_creations);
    row += ',';
    row += std::to_string(r.vm_deletions);
    row += ',';
    row += std::to_string(r.acquisitions);
    row += ',';
    row += std::to_string(r.cloudlets_completed);
    row += ',';
    row += fixed6(r.mean_pf_of_grants);
    return row;
}

std::string write_metrics(std::vector<MetricsRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const MetricsRecord& a, const MetricsRecord& b) {
                         return a.run_id < b.run_id;
                     });
    std::string text = metrics_header();
    text += '\n';
    for (const auto& record : records) {
        text += format_metrics_row(record);
        text += '\n';
    }
    return text;
}

std::vector<MetricsRecord> parse_metrics(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line) || line != metrics_header())
        throw std::invalid_argument("metrics: missing or unexpected header row");
    std::vector<MetricsRecord> records;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 12)
            throw std::invalid_argument("metrics: expected 12 fields, got " +
                                        std::to_string(fields.size()));
        MetricsRecord r;
        r.run_id = std::stoull(fields[0]);
        r.policy = fields[1];
        r.seed = std::stoull(fields[2]);
        r.total_cost = std::stod(fields[3]);
        r.mean_cost_per_cloudlet = std::stod(fields[4]);
        r.makespan_s = std::stod(fields[5]);
        r.mean_cloudlet_turnaround_s = std::stod(fields[6]);
        r.vm_creations = std::stoull(fields[7]);
        r.vm_deletions = std::stoull(fields[8]);
        r.acquisitions = std::stoull(fields[9]);
        r.cloudlets_completed = std::stoull(fields[10]);
        r.mean_pf_of_grants = std::stod(fields[11]);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace provsim
