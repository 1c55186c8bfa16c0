#include "provsim/vm_manager.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace provsim {

const char* to_string(RebalanceAction action) {
    switch (action) {
        case RebalanceAction::ScaleUp: return "ScaleUp";
        case RebalanceAction::ScaleDown: return "ScaleDown";
        case RebalanceAction::Hold: return "Hold";
    }
    return "?";
}

VmManager::VmManager(double low_watermark, double high_watermark)
    : low_watermark_(low_watermark), high_watermark_(high_watermark) {
    if (!(low_watermark >= 0) || !(low_watermark < high_watermark))
        throw std::invalid_argument("VmManager: watermarks must satisfy 0 <= low < high");
}

std::size_t VmManager::total_queued() const {
    std::size_t total = 0;
    for (const auto& [id, vm] : vms_) total += vm.queue.size();
    return total;
}

double VmManager::vm_load() const {
    if (vms_.empty()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(total_queued()) / static_cast<double>(vms_.size());
}

RebalanceAction VmManager::rebalance() const {
    const double load = vm_load();
    if (load > high_watermark_) return RebalanceAction::ScaleUp;
    if (load < low_watermark_ && vms_.size() >= 2) return RebalanceAction::ScaleDown;
    return RebalanceAction::Hold;
}

VmId VmManager::select_victim(const ResourceScoreFn& pf_of,
                              const ResourceScoreFn& et_of) const {
    if (vms_.size() < 2)
        throw std::logic_error("select_victim: pool must hold at least 2 VMs");
    bool have = false;
    VmId victim = 0;
    double victim_pf = 0.0;
    double victim_et = 0.0;
    for (const auto& [id, vm] : vms_) {  // vm_id ascending: first win on full tie
        const double pf = pf_of(vm.resource_id);
        const double et = et_of(vm.resource_id);
        if (!have || pf < victim_pf || (pf == victim_pf && et > victim_et)) {
            have = true;
            victim = id;
            victim_pf = pf;
            victim_et = et;
        }
    }
    return victim;
}

std::vector<std::pair<CloudletId, VmId>> VmManager::redirect_cloudlets(VmId victim) {
    VmInstance& from = vm(victim);
    std::vector<VmId> survivors;
    for (const auto& [id, v] : vms_)
        if (id != victim) survivors.push_back(id);
    if (survivors.empty())
        throw std::logic_error("redirect_cloudlets: no surviving VM");

    std::vector<CloudletId> moved(from.queue.begin(), from.queue.end());
    std::sort(moved.begin(), moved.end());
    from.queue.clear();
    from.busy = false;

    std::vector<std::pair<CloudletId, VmId>> assignments;
    assignments.reserve(moved.size());
    for (std::size_t i = 0; i < moved.size(); ++i) {
        const VmId target = survivors[i % survivors.size()];
        vms_.at(target).queue.push_back(moved[i]);
        assignments.emplace_back(moved[i], target);
    }
    return assignments;
}

ResourceId VmManager::delete_vm(VmId victim) {
    VmInstance& v = vm(victim);
    if (!v.queue.empty())
        throw std::logic_error("delete_vm: redirect_cloudlets must run first");
    const ResourceId resource = v.resource_id;
    vms_.erase(victim);
    return resource;
}

ResourceId VmManager::complete_vm(VmId vm_id) {
    VmInstance& v = vm(vm_id);
    if (!v.queue.empty())
        throw std::logic_error("complete_vm: queue must be empty");
    const ResourceId resource = v.resource_id;
    vms_.erase(vm_id);
    return resource;
}

VmId VmManager::add_vm(const ResourceId& resource_id, double pf_at_allocation,
                       double created_at) {
    VmInstance v;
    v.vm_id = next_vm_id_++;
    v.resource_id = resource_id;
    v.pf_at_allocation = pf_at_allocation;
    v.created_at = created_at;
    const VmId id = v.vm_id;
    vms_.emplace(id, std::move(v));
    return id;
}

VmId VmManager::assign_cloudlet(CloudletId cloudlet_id) {
    if (vms_.empty())
        throw std::logic_error("assign_cloudlet: pool is empty");
    VmId best = 0;
    std::size_t best_depth = 0;
    bool have = false;
    for (const auto& [id, v] : vms_) {
        if (!have || v.queue.size() < best_depth) {
            have = true;
            best = id;
            best_depth = v.queue.size();
        }
    }
    vms_.at(best).queue.push_back(cloudlet_id);
    return best;
}

VmInstance& VmManager::vm(VmId vm_id) {
    const auto it = vms_.find(vm_id);
    if (it == vms_.end())
        throw std::logic_error("unknown vm_id: " + std::to_string(vm_id));
    return it->second;
}

const VmInstance& VmManager::vm(VmId vm_id) const {
    const auto it = vms_.find(vm_id);
    if (it == vms_.end())
        throw std::logic_error("unknown vm_id: " + std::to_string(vm_id));
    return it->second;
}

}  // namespace provsim
