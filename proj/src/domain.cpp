#include "provsim/domain.hpp"

#include <stdexcept>
#include <string>

namespace provsim {

namespace {

[[noreturn]] void reject(const std::string& type, const std::string& field,
                         const std::string& why) {
    throw std::invalid_argument(type + "." + field + ": " + why);
}

}  // namespace

void ResourceSpec::validate() const {
    if (pe_count < 1) reject("ResourceSpec", "pe_count", "must be >= 1");
    if (!(mips_per_pe > 0)) reject("ResourceSpec", "mips_per_pe", "must be > 0");
    if (!(ram_mb > 0)) reject("ResourceSpec", "ram_mb", "must be > 0");
    if (!(storage_mb >= 0)) reject("ResourceSpec", "storage_mb", "must be >= 0");
    if (!(bandwidth_mbps > 0)) reject("ResourceSpec", "bandwidth_mbps", "must be > 0");
}

bool spec_satisfies(const ResourceSpec& candidate, const ResourceSpec& request) {
    return candidate.pe_count >= request.pe_count &&
           candidate.mips_per_pe >= request.mips_per_pe &&
           candidate.ram_mb >= request.ram_mb &&
           candidate.storage_mb >= request.storage_mb &&
           candidate.bandwidth_mbps >= request.bandwidth_mbps;
}

void OwnedResource::validate() const {
    if (resource_id.empty()) reject("OwnedResource", "resource_id", "must be non-empty");
    if (owner_id.empty()) reject("OwnedResource", "owner_id", "must be non-empty");
    spec.validate();
    if (!(resource_cost >= 0)) reject("OwnedResource", "resource_cost", "must be >= 0");
}

void NetworkLink::validate() const {
    if (owner_id.empty()) reject("NetworkLink", "owner_id", "must be non-empty");
    if (hops_count < 1) reject("NetworkLink", "hops_count", "must be >= 1");
    if (!(bandwidth_mbps > 0)) reject("NetworkLink", "bandwidth_mbps", "must be > 0");
    if (!(delay_ms >= 0)) reject("NetworkLink", "delay_ms", "must be >= 0");
}

const char* to_string(CloudletStatus status) {
    switch (status) {
        case CloudletStatus::Pending: return "Pending";
        case CloudletStatus::Running: return "Running";
        case CloudletStatus::Completed: return "Completed";
    }
    return "?";
}

void Cloudlet::validate() const {
    if (!(length_mi > 0)) reject("Cloudlet", "length_mi", "must be > 0");
    if (!(payload_mb >= 0)) reject("Cloudlet", "payload_mb", "must be >= 0");
    if (!(arrival_time >= 0)) reject("Cloudlet", "arrival_time", "must be >= 0");
}

void Cloudlet::set_status(CloudletStatus next) {
    if (next == status) return;
    const bool ok = (status == CloudletStatus::Pending && next == CloudletStatus::Running) ||
                    (status == CloudletStatus::Running && next == CloudletStatus::Completed);
    if (!ok) {
        throw std::logic_error(std::string("cloudlet status transition ") +
                               to_string(status) + " -> " + to_string(next) +
                               " is not allowed");
    }
    status = next;
}

}  // namespace provsim
