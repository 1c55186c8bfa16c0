// Protocol message log for one simulation run. Messages append in processing
// order; each allocation's conversation is contiguous, and timestamps are
// non-decreasing within a conversation (conversations may overlap in time
// because owner link delays stretch a conversation past later events).
//
// Line format (one message per line, comma separated):
//   <time fixed-6>,<step_tag>,<actor>,<payload>
// where payload is a semicolon-joined list of present ids, e.g.
//   0.040000,AccessGranted,Owner,owner=o2;res=r7

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "provsim/domain.hpp"

namespace provsim {

enum class StepTag {
    VmRequest,
    RalHit,
    RalMiss,
    AvailabilityQuery,
    AvailabilityAck,
    OfferSelected,
    AcquireRequest,
    AccessGranted,
    RalUpdated,
    GrantToVmm,
    ReleaseToProvisioner,
    RalReleased,
};

enum class Actor { VMM, Provisioner, Owner };

std::string_view to_string(StepTag tag);
std::string_view to_string(Actor actor);
std::optional<StepTag> step_from_string(std::string_view text);
std::optional<Actor> actor_from_string(std::string_view text);

struct TracePayload {
    std::optional<VmId> vm;
    std::optional<ResourceId> resource;
    std::optional<OwnerId> owner;
};

struct ProtocolMessage {
    double time = 0.0;  // simulated seconds
    StepTag step = StepTag::VmRequest;
    Actor actor = Actor::VMM;
    TracePayload payload;
};

using ProtocolTrace = std::vector<ProtocolMessage>;

std::string format_trace_line(const ProtocolMessage& message);
std::optional<ProtocolMessage> parse_trace_line(std::string_view line);

// All messages, one line each, each line terminated by '\n'.
std::string format_trace(const ProtocolTrace& trace);

}  // namespace provsim
