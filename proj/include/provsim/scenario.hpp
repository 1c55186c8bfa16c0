// Scenario file schema and validation. The concrete syntax is JSON; see
// scenarios/reference.json for an annotated example in the README.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "provsim/cost_model.hpp"
#include "provsim/provisioner.hpp"
#include "provsim/scoring.hpp"
#include "provsim/workload.hpp"

namespace provsim {

struct VmmConfig {
    std::uint64_t initial_vms = 0;
    double high_watermark = 4.0;  // pending+running cloudlets per VM
    double low_watermark = 1.0;
    ResourceSpec vm_request_spec;  // shape of every VM resource request
};

struct ScenarioConfig {
    std::vector<OwnerCatalog> owners;  // each with its link attached
    WorkloadParams workload;
    VmmConfig vmm;
    ScoringParams scoring;
    double reference_cloudlet_mi = 1000.0;
    CostWeights cost_weights;
};

class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Parses and fully validates a scenario document. Unspecified optional
// fields take the documented defaults. Throws ScenarioError with a
// line/field-identifying message on any problem.
ScenarioConfig parse_scenario(const std::string& text);

// Canonical serialization: every field materialized, keys sorted.
// parse_scenario(serialize_scenario(c)) reproduces c.
std::string serialize_scenario(const ScenarioConfig& config);

ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace provsim
