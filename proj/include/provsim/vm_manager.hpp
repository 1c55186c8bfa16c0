// The Virtual Machine Manager: maintains the VM pool, watches the load
// watermarks, and performs deletion with cloudlet redirection. Resource
// release itself is the caller's job; delete_vm / complete_vm hand back the
// resource id to release.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "provsim/domain.hpp"

namespace provsim {

enum class RebalanceAction { ScaleUp, ScaleDown, Hold };

const char* to_string(RebalanceAction action);

// Current score of a VM's backing resource, for victim selection.
using ResourceScoreFn = std::function<double(const ResourceId&)>;

class VmManager {
public:
    // Watermarks are pending+running cloudlets per VM; 0 <= low < high.
    VmManager(double low_watermark, double high_watermark);

    // Mean pending+running cloudlets per VM; +infinity for an empty pool so
    // that the first cloudlet triggers creation.
    double vm_load() const;

    // ScaleUp iff load > high; ScaleDown iff load < low and >= 2 VMs; else Hold.
    RebalanceAction rebalance() const;

    // VM whose backing resource has minimal PF; PF ties broken by maximal
    // E_T estimate, remaining ties by vm_id ascending. Needs >= 2 VMs.
    VmId select_victim(const ResourceScoreFn& pf_of, const ResourceScoreFn& et_of) const;

    // Moves every cloudlet of the victim onto the surviving VMs' queues,
    // round-robin in cloudlet_id order. Returns the (cloudlet, target) pairs.
    std::vector<std::pair<CloudletId, VmId>> redirect_cloudlets(VmId victim);

    // Removes the victim (its queue must already be empty) and returns the
    // backing resource id for the caller to release with success=false.
    ResourceId delete_vm(VmId victim);

    // Removes a VM that finished all its work; returns the backing resource
    // id for the caller to release with success=true.
    ResourceId complete_vm(VmId vm_id);

    // Registers a freshly granted VM; ids are a monotone counter from 1.
    VmId add_vm(const ResourceId& resource_id, double pf_at_allocation,
                double created_at);

    // Appends the cloudlet to the least-loaded VM's queue (ties by vm_id
    // ascending). Pool must be non-empty.
    VmId assign_cloudlet(CloudletId cloudlet_id);

    bool has_vm(VmId vm_id) const { return vms_.count(vm_id) > 0; }
    VmInstance& vm(VmId vm_id);
    const VmInstance& vm(VmId vm_id) const;
    const std::map<VmId, VmInstance>& pool() const { return vms_; }
    std::size_t size() const { return vms_.size(); }
    std::size_t total_queued() const;
    double low_watermark() const { return low_watermark_; }
    double high_watermark() const { return high_watermark_; }

private:
    double low_watermark_;
    double high_watermark_;
    std::map<VmId, VmInstance> vms_;  // keyed by vm_id: deterministic iteration
    VmId next_vm_id_ = 1;
};

}  // namespace provsim
