// The Resource Provisioner: owns the Resource Allocation List (RAL), runs the
// resource allocation protocol against the owner catalogs, and records every
// message of every allocation in a checkable trace.
//
// Protocol shape per allocation (both paths end in exactly one GrantToVmm):
//   RAL hit : VmRequest, RalHit, GrantToVmm
//   RAL miss: VmRequest, RalMiss, AvailabilityQuery per owner,
//             AvailabilityAck per owner with a feasible offer, OfferSelected,
//             AcquireRequest, AccessGranted, RalUpdated, GrantToVmm
//
// Owners answer availability queries deterministically after one link round
// trip (2 * delay_ms); the acquisition handshake costs another round trip on
// the chosen owner's link.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "provsim/cost_model.hpp"
#include "provsim/domain.hpp"
#include "provsim/scoring.hpp"
#include "provsim/trace.hpp"

namespace provsim {

// One Resource Owner: an immutable catalog plus the link to the provisioner.
struct OwnerCatalog {
    OwnerId owner_id;
    NetworkLink link;
    std::vector<OwnedResource> resources;
};

// Ledger record for one leased resource.
struct RALEntry {
    OwnedResource resource;
    bool allocated = false;
    VmId allocated_to = 0;  // meaningful only when allocated
    double cached_lcc = 0.0;  // L_CC paid at the most recent acquisition
    ReliabilityStats stats;
    ExecTimeEstimate et;

    double utilization_cost() const {
        return resource_utilization_cost(resource.resource_cost, cached_lcc);
    }
};

// An owner's response for one feasible resource, priced at offer time.
struct OwnerOffer {
    OwnedResource resource;
    NetworkLink link;
    double lcc = 0.0;
    double cf = 0.0;  // cost_factor(resource_cost, lcc)
};

// What a selection policy sees for one RAL candidate.
struct RalCandidateView {
    ResourceId resource_id;
    double pf = 0.0;
    double pv = 0.0;
    double ruc = 0.0;
};

struct AllocationRequest {
    ResourceSpec spec;
    double payload_mb = 0.0;
    VmId vm_id = 0;
};

struct AllocationResult {
    ResourceId resource_id;
    double grant_time = 0.0;
    double pf_at_grant = 0.0;
    ProtocolTrace trace;  // the messages of this allocation only
};

class NoResourceAvailable : public std::runtime_error {
public:
    explicit NoResourceAvailable(const std::string& what) : std::runtime_error(what) {}
};

// Selection hooks: given the candidates of the current protocol phase,
// return the index of the chosen one. Policies differ only here.
using RalSelector = std::function<std::size_t(const std::vector<RalCandidateView>&)>;
using OfferSelector = std::function<std::size_t(const std::vector<OwnerOffer>&)>;

class Provisioner {
public:
    Provisioner(std::vector<OwnerCatalog> owners, CostWeights weights,
                ScoringParams scoring, double reference_cloudlet_mi);

    // ERA Case A: PF-ranked grant on a RAL hit, minimum-CF acquisition on a
    // miss. Throws NoResourceAvailable when neither the RAL nor any owner
    // can satisfy the request.
    AllocationResult handle_vm_request(const AllocationRequest& request, double now);

    // Same protocol with policy-supplied choices at the two decision points.
    AllocationResult allocate(const AllocationRequest& request, double now,
                              const RalSelector& select_from_ral,
                              const OfferSelector& select_from_offers);

    // The ERA decision rules, exposed so policies and tests can reuse them.
    static RalSelector era_ral_selector();
    static OfferSelector era_offer_selector();

    // Ids of Available RAL entries whose spec satisfies the request.
    std::vector<ResourceId> check_ral(const ResourceSpec& request) const;

    // One offer per owner resource that satisfies the request and is not
    // already leased into the RAL. Empty list signals unavailability.
    std::vector<OwnerOffer> query_owners(const ResourceSpec& request,
                                         double payload_mb) const;

    // Minimum cf, ties by resource_id ascending. Throws on an empty list.
    static std::size_t select_offer(const std::vector<OwnerOffer>& offers);

    // Leases the offered resource into the RAL as Available and charges its
    // cf to the run ledger. Returns the completion time of the acquisition
    // handshake. Throws if the resource is already in the RAL.
    double acquire_resource(const OwnerOffer& offer, double now);

    // ERA grant: the PF-ranked first candidate transitions to Allocated.
    ResourceId allocate_to_vmm(const std::vector<ResourceId>& candidates, VmId vm_id,
                               double now);

    // Allocated -> Available, recording the lease outcome.
    void release_resource(const ResourceId& resource_id, bool success, double now);

    // Removes an Available entry from the RAL, handing the resource back to
    // its owner (it becomes offerable again). Used at simulation end.
    void return_to_owner(const ResourceId& resource_id);
    void return_all_to_owners();

    // Feeds one observed cloudlet runtime into the entry's E_T estimate.
    void observe_execution(const ResourceId& resource_id, double seconds);

    // Current PF / E_T of an entry (PF cost floored, see note in the .cpp).
    double pf_of(const ResourceId& resource_id) const;
    double et_of(const ResourceId& resource_id) const;

    const RALEntry& entry(const ResourceId& resource_id) const;
    bool in_ral(const ResourceId& resource_id) const;
    const std::map<ResourceId, RALEntry>& ral() const { return ral_; }
    const std::vector<OwnerCatalog>& owners() const { return owners_; }
    const ScoringParams& scoring_params() const { return scoring_; }

    double total_cost() const { return total_cost_; }
    std::uint64_t acquisitions() const { return acquisitions_; }
    const std::vector<double>& grant_pfs() const { return grant_pfs_; }
    const ProtocolTrace& trace() const { return trace_; }

    // Throws std::logic_error if the RAL and the owner catalogs disagree:
    // every entry must come from exactly one catalog, never duplicated.
    void verify_conservation() const;

private:
    RalCandidateView candidate_view(const RALEntry& e) const;
    RALEntry& require_entry(const ResourceId& resource_id);
    void grant(const ResourceId& resource_id, VmId vm_id, double time);

    std::vector<OwnerCatalog> owners_;
    CostWeights weights_;
    ScoringParams scoring_;
    double reference_cloudlet_mi_;
    std::map<ResourceId, RALEntry> ral_;
    ProtocolTrace trace_;
    double total_cost_ = 0.0;
    std::uint64_t acquisitions_ = 0;
    std::vector<double> grant_pfs_;
};

}  // namespace provsim
