#include "provsim/provisioner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace provsim {

namespace {

// Floor for the cost term of PF so that a zero-priced resource on a
// zero-weighted link ranks best instead of tripping the c > 0 precondition.
constexpr double kMinPfCost = 1e-12;

double seconds_for_round_trip(const NetworkLink& link) {
    return 2.0 * link.delay_ms / 1000.0;
}

}  // namespace

Provisioner::Provisioner(std::vector<OwnerCatalog> owners, CostWeights weights,
                         ScoringParams scoring, double reference_cloudlet_mi)
    : owners_(std::move(owners)),
      weights_(weights),
      scoring_(scoring),
      reference_cloudlet_mi_(reference_cloudlet_mi) {
    weights_.validate();
    scoring_.validate();
    if (!(reference_cloudlet_mi_ > 0))
        throw std::invalid_argument("reference_cloudlet_mi: must be > 0");
    std::set<OwnerId> owner_ids;
    std::set<ResourceId> resource_ids;
    for (const auto& owner : owners_) {
        owner.link.validate();
        if (owner.owner_id != owner.link.owner_id)
            throw std::invalid_argument("OwnerCatalog: link owner_id mismatch for " +
                                        owner.owner_id);
        if (!owner_ids.insert(owner.owner_id).second)
            throw std::invalid_argument("duplicate owner_id: " + owner.owner_id);
        for (const auto& resource : owner.resources) {
            resource.validate();
            if (resource.owner_id != owner.owner_id)
                throw std::invalid_argument("OwnedResource " + resource.resource_id +
                                            ": owner_id mismatch");
            if (!resource_ids.insert(resource.resource_id).second)
                throw std::invalid_argument("duplicate resource_id: " +
                                            resource.resource_id);
        }
    }
}

RalCandidateView Provisioner::candidate_view(const RALEntry& e) const {
    RalCandidateView view;
    view.resource_id = e.resource.resource_id;
    view.ruc = e.utilization_cost();
    view.pf = performance_factor(scoring_, reliability(e.stats),
                                 std::max(view.ruc, kMinPfCost), e.et.et_seconds);
    view.pv = popularity_value(e.et.et_seconds);
    return view;
}

RalSelector Provisioner::era_ral_selector() {
    return [](const std::vector<RalCandidateView>& candidates) {
        std::vector<RankedCandidate> ranked;
        ranked.reserve(candidates.size());
        for (const auto& c : candidates)
            ranked.push_back({c.resource_id, c.pf, c.pv});
        const ResourceId best = rank_candidates(std::move(ranked)).front().resource_id;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i].resource_id == best) return i;
        return std::size_t{0};  // unreachable: best comes from candidates
    };
}

OfferSelector Provisioner::era_offer_selector() {
    return [](const std::vector<OwnerOffer>& offers) { return select_offer(offers); };
}

AllocationResult Provisioner::handle_vm_request(const AllocationRequest& request,
                                                double now) {
    return allocate(request, now, era_ral_selector(), era_offer_selector());
}

AllocationResult Provisioner::allocate(const AllocationRequest& request, double now,
                                       const RalSelector& select_from_ral,
                                       const OfferSelector& select_from_offers) {
    request.spec.validate();
    const std::size_t trace_begin = trace_.size();
    trace_.push_back({now, StepTag::VmRequest, Actor::VMM, {request.vm_id, {}, {}}});

    AllocationResult result;
    const std::vector<ResourceId> candidates = check_ral(request.spec);
    if (!candidates.empty()) {
        trace_.push_back({now, StepTag::RalHit, Actor::Provisioner, {request.vm_id, {}, {}}});
        std::vector<RalCandidateView> views;
        views.reserve(candidates.size());
        for (const auto& id : candidates) views.push_back(candidate_view(entry(id)));
        const std::size_t chosen = select_from_ral(views);
        if (chosen >= views.size())
            throw std::logic_error("RAL selector returned an out-of-range index");
        grant(views[chosen].resource_id, request.vm_id, now);
        result.resource_id = views[chosen].resource_id;
        result.grant_time = now;
    } else {
        trace_.push_back({now, StepTag::RalMiss, Actor::Provisioner, {request.vm_id, {}, {}}});
        const std::vector<OwnerOffer> offers = query_owners(request.spec, request.payload_mb);

        for (const auto& owner : owners_)
            trace_.push_back({now, StepTag::AvailabilityQuery, Actor::Provisioner,
                              {{}, {}, owner.owner_id}});

        // One ack per owner with at least one feasible offer, stamped at the
        // time the answer arrives back (one query round trip on its link).
        std::vector<std::pair<double, OwnerId>> acks;
        for (const auto& offer : offers) {
            const OwnerId& id = offer.link.owner_id;
            if (std::none_of(acks.begin(), acks.end(),
                             [&](const auto& a) { return a.second == id; }))
                acks.emplace_back(now + seconds_for_round_trip(offer.link), id);
        }
        std::sort(acks.begin(), acks.end());
        for (const auto& [time, owner_id] : acks)
            trace_.push_back({time, StepTag::AvailabilityAck, Actor::Owner,
                              {{}, {}, owner_id}});

        if (offers.empty())
            throw NoResourceAvailable("no RAL entry or owner resource satisfies the request");

        const double selection_time = acks.back().first;
        const std::size_t chosen = select_from_offers(offers);
        if (chosen >= offers.size())
            throw std::logic_error("offer selector returned an out-of-range index");
        const OwnerOffer& offer = offers[chosen];
        trace_.push_back({selection_time, StepTag::OfferSelected, Actor::Provisioner,
                          {{}, offer.resource.resource_id, offer.resource.owner_id}});

        const double acquired_at = acquire_resource(offer, selection_time);
        grant(offer.resource.resource_id, request.vm_id, acquired_at);
        result.resource_id = offer.resource.resource_id;
        result.grant_time = acquired_at;
    }
    result.pf_at_grant = grant_pfs_.back();
    result.trace.assign(trace_.begin() + static_cast<std::ptrdiff_t>(trace_begin),
                        trace_.end());
    return result;
}

std::vector<ResourceId> Provisioner::check_ral(const ResourceSpec& request) const {
    std::vector<ResourceId> candidates;
    for (const auto& [id, e] : ral_)
        if (!e.allocated && spec_satisfies(e.resource.spec, request))
            candidates.push_back(id);
    return candidates;
}

std::vector<OwnerOffer> Provisioner::query_owners(const ResourceSpec& request,
                                                  double payload_mb) const {
    std::vector<OwnerOffer> offers;
    for (const auto& owner : owners_) {
        for (const auto& resource : owner.resources) {
            if (ral_.count(resource.resource_id)) continue;  // already leased
            if (!spec_satisfies(resource.spec, request)) continue;
            OwnerOffer offer;
            offer.resource = resource;
            offer.link = owner.link;
            offer.lcc = link_communication_cost(owner.link, payload_mb, weights_);
            offer.cf = cost_factor(resource.resource_cost, offer.lcc);
            offers.push_back(std::move(offer));
        }
    }
    return offers;
}

std::size_t Provisioner::select_offer(const std::vector<OwnerOffer>& offers) {
    if (offers.empty())
        throw std::invalid_argument("select_offer: offer list must be non-empty");
    std::size_t best = 0;
    for (std::size_t i = 1; i < offers.size(); ++i) {
        if (offers[i].cf < offers[best].cf ||
            (offers[i].cf == offers[best].cf &&
             offers[i].resource.resource_id < offers[best].resource.resource_id))
            best = i;
    }
    return best;
}

double Provisioner::acquire_resource(const OwnerOffer& offer, double now) {
    const ResourceId& id = offer.resource.resource_id;
    if (ral_.count(id))
        throw std::logic_error("acquire_resource: " + id + " is already in the RAL");

    trace_.push_back({now, StepTag::AcquireRequest, Actor::Provisioner,
                      {{}, id, offer.resource.owner_id}});
    const double granted_at = now + seconds_for_round_trip(offer.link);
    trace_.push_back({granted_at, StepTag::AccessGranted, Actor::Owner,
                      {{}, id, offer.resource.owner_id}});

    RALEntry e;
    e.resource = offer.resource;
    e.cached_lcc = offer.lcc;
    e.et = initial_execution_estimate(offer.resource.spec, reference_cloudlet_mi_);
    ral_.emplace(id, std::move(e));
    total_cost_ += offer.cf;
    ++acquisitions_;
    trace_.push_back({granted_at, StepTag::RalUpdated, Actor::Provisioner, {{}, id, {}}});
    return granted_at;
}

void Provisioner::grant(const ResourceId& resource_id, VmId vm_id, double time) {
    RALEntry& e = require_entry(resource_id);
    if (e.allocated)
        throw std::logic_error("grant: " + resource_id + " is already allocated");
    e.allocated = true;
    e.allocated_to = vm_id;
    grant_pfs_.push_back(candidate_view(e).pf);
    trace_.push_back({time, StepTag::GrantToVmm, Actor::Provisioner,
                      {vm_id, resource_id, {}}});
}

ResourceId Provisioner::allocate_to_vmm(const std::vector<ResourceId>& candidates,
                                        VmId vm_id, double now) {
    if (candidates.empty())
        throw std::invalid_argument("allocate_to_vmm: candidate list must be non-empty");
    std::vector<RankedCandidate> ranked;
    ranked.reserve(candidates.size());
    for (const auto& id : candidates) {
        const RALEntry& e = entry(id);
        if (e.allocated)
            throw std::logic_error("allocate_to_vmm: candidate " + id + " is not Available");
        const RalCandidateView view = candidate_view(e);
        ranked.push_back({view.resource_id, view.pf, view.pv});
    }
    const ResourceId best = rank_candidates(std::move(ranked)).front().resource_id;
    grant(best, vm_id, now);
    return best;
}

void Provisioner::release_resource(const ResourceId& resource_id, bool success,
                                   double now) {
    RALEntry& e = require_entry(resource_id);
    if (!e.allocated)
        throw std::logic_error("release_resource: " + resource_id + " is not allocated");
    trace_.push_back({now, StepTag::ReleaseToProvisioner, Actor::VMM,
                      {e.allocated_to, resource_id, {}}});
    e.allocated = false;
    e.allocated_to = 0;
    e.stats = record_outcome(e.stats, success);
    trace_.push_back({now, StepTag::RalReleased, Actor::Provisioner,
                      {{}, resource_id, {}}});
}

void Provisioner::return_to_owner(const ResourceId& resource_id) {
    const RALEntry& e = require_entry(resource_id);
    if (e.allocated)
        throw std::logic_error("return_to_owner: " + resource_id + " is still allocated");
    ral_.erase(resource_id);
}

void Provisioner::return_all_to_owners() {
    for (auto it = ral_.begin(); it != ral_.end();) {
        if (it->second.allocated)
            throw std::logic_error("return_all_to_owners: " + it->first +
                                   " is still allocated");
        it = ral_.erase(it);
    }
}

void Provisioner::observe_execution(const ResourceId& resource_id, double seconds) {
    RALEntry& e = require_entry(resource_id);
    e.et = record_execution_time(e.et, seconds, scoring_);
}

double Provisioner::pf_of(const ResourceId& resource_id) const {
    return candidate_view(entry(resource_id)).pf;
}

double Provisioner::et_of(const ResourceId& resource_id) const {
    return entry(resource_id).et.et_seconds;
}

const RALEntry& Provisioner::entry(const ResourceId& resource_id) const {
    const auto it = ral_.find(resource_id);
    if (it == ral_.end())
        throw std::logic_error("unknown RAL entry: " + resource_id);
    return it->second;
}

RALEntry& Provisioner::require_entry(const ResourceId& resource_id) {
    const auto it = ral_.find(resource_id);
    if (it == ral_.end())
        throw std::logic_error("unknown RAL entry: " + resource_id);
    return it->second;
}

bool Provisioner::in_ral(const ResourceId& resource_id) const {
    return ral_.count(resource_id) > 0;
}

void Provisioner::verify_conservation() const {
    for (const auto& owner : owners_) {
        std::size_t leased = 0;
        for (const auto& resource : owner.resources)
            if (ral_.count(resource.resource_id)) ++leased;
        std::size_t from_owner = 0;
        for (const auto& [id, e] : ral_)
            if (e.resource.owner_id == owner.owner_id) ++from_owner;
        // Entries from this owner must be exactly the leased subset of its
        // catalog; anything else means an entry appeared out of thin air.
        if (leased != from_owner)
            throw std::logic_error("RAL conservation violated for owner " + owner.owner_id);
    }
    std::size_t cataloged = 0;
    for (const auto& [id, e] : ral_) {
        bool found = false;
        for (const auto& owner : owners_)
            for (const auto& resource : owner.resources)
                if (resource.resource_id == id) found = true;
        if (!found)
            throw std::logic_error("RAL entry " + id + " is not in any owner catalog");
        ++cataloged;
    }
    assert(cataloged == ral_.size());
}

}  // namespace provsim
