// Shared domain types for the provisioning simulator: resource specs,
// owner catalogs entries, network links, cloudlets and VM instances.

#pragma once

#include <cstdint>
#include <deque>
#include <string>

namespace provsim {

using OwnerId = std::string;
using ResourceId = std::string;
using VmId = std::uint64_t;
using CloudletId = std::uint64_t;

// Capacity of a provisionable resource, also used as a request shape.
struct ResourceSpec {
    int pe_count = 1;             // processing elements, >= 1
    double mips_per_pe = 1.0;     // million instructions / second per PE, > 0
    double ram_mb = 1.0;          // mebibytes, > 0
    double storage_mb = 0.0;      // mebibytes, >= 0
    double bandwidth_mbps = 1.0;  // megabits / second, > 0

    void validate() const;  // throws std::invalid_argument naming the field
};

// True iff every candidate field >= the corresponding request field
// (componentwise dominance; no overcommit, no partial allocation).
bool spec_satisfies(const ResourceSpec& candidate, const ResourceSpec& request);

// A resource held by a Resource Owner, leasable at a flat price.
struct OwnedResource {
    ResourceId resource_id;
    OwnerId owner_id;
    ResourceSpec spec;
    double resource_cost = 0.0;  // flat lease price charged once per acquisition

    void validate() const;
};

// Owner <-> provisioner path parameters feeding the link communication cost.
struct NetworkLink {
    OwnerId owner_id;
    int hops_count = 1;          // >= 1
    double bandwidth_mbps = 1.0; // > 0
    double delay_ms = 0.0;       // >= 0, one-way

    void validate() const;
};

enum class CloudletStatus { Pending, Running, Completed };

const char* to_string(CloudletStatus status);

// Unit of work executed by a VM.
struct Cloudlet {
    CloudletId cloudlet_id = 0;
    double length_mi = 1.0;    // million instructions, > 0
    double payload_mb = 0.0;   // megabits transferred at allocation, >= 0
    double arrival_time = 0.0; // simulated seconds, >= 0
    CloudletStatus status = CloudletStatus::Pending;

    void validate() const;
    // Transitions only Pending -> Running -> Completed; re-setting the
    // current status is a no-op (a redirected running cloudlet stays Running).
    void set_status(CloudletStatus next);
};

// A virtual machine bound to one backing resource.
struct VmInstance {
    VmId vm_id = 0;
    ResourceId resource_id;
    std::deque<CloudletId> queue;  // front is the running cloudlet when busy
    bool busy = false;
    double pf_at_allocation = 0.0;
    double created_at = 0.0;  // grant time; execution starts no earlier
};

}  // namespace provsim
