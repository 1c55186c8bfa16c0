#include "provsim/trace.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>

namespace provsim {

namespace {

constexpr std::array<std::string_view, 12> kStepNames = {
    "VmRequest",      "RalHit",        "RalMiss",     "AvailabilityQuery",
    "AvailabilityAck", "OfferSelected", "AcquireRequest", "AccessGranted",
    "RalUpdated",     "GrantToVmm",    "ReleaseToProvisioner", "RalReleased",
};

constexpr std::array<std::string_view, 3> kActorNames = {"VMM", "Provisioner", "Owner"};

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace

std::string_view to_string(StepTag tag) {
    return kStepNames[static_cast<std::size_t>(tag)];
}

std::string_view to_string(Actor actor) {
    return kActorNames[static_cast<std::size_t>(actor)];
}

std::optional<StepTag> step_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kStepNames.size(); ++i)
        if (kStepNames[i] == text) return static_cast<StepTag>(i);
    return std::nullopt;
}

std::optional<Actor> actor_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kActorNames.size(); ++i)
        if (kActorNames[i] == text) return static_cast<Actor>(i);
    return std::nullopt;
}

std::string format_trace_line(const ProtocolMessage& message) {
    std::string line = fixed6(message.time);
    line += ',';
    line += to_string(message.step);
    line += ',';
    line += to_string(message.actor);
    line += ',';
    bool first = true;
    auto add = [&](std::string_view key, const std::string& value) {
        if (!first) line += ';';
        line += key;
        line += '=';
        line += value;
        first = false;
    };
    if (message.payload.vm) add("vm", std::to_string(*message.payload.vm));
    if (message.payload.resource) add("res", *message.payload.resource);
    if (message.payload.owner) add("owner", *message.payload.owner);
    return line;
}

std::optional<ProtocolMessage> parse_trace_line(std::string_view line) {
    std::array<std::string_view, 4> cols;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        cols[i] = line.substr(0, comma);
        line.remove_prefix(comma + 1);
    }
    cols[3] = line;

    ProtocolMessage message;
    char* end = nullptr;
    const std::string time_text(cols[0]);
    message.time = std::strtod(time_text.c_str(), &end);
    if (end == time_text.c_str() || *end != '\0') return std::nullopt;

    const auto step = step_from_string(cols[1]);
    const auto actor = actor_from_string(cols[2]);
    if (!step || !actor) return std::nullopt;
    message.step = *step;
    message.actor = *actor;

    std::string_view payload = cols[3];
    while (!payload.empty()) {
        const auto semi = payload.find(';');
        const std::string_view item =
            semi == std::string_view::npos ? payload : payload.substr(0, semi);
        payload.remove_prefix(semi == std::string_view::npos ? payload.size() : semi + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) return std::nullopt;
        const std::string_view key = item.substr(0, eq);
        const std::string value(item.substr(eq + 1));
        if (key == "vm") {
            message.payload.vm = std::strtoull(value.c_str(), nullptr, 10);
        } else if (key == "res") {
            message.payload.resource = value;
        } else if (key == "owner") {
            message.payload.owner = value;
        } else {
            return std::nullopt;
        }
    }
    return message;
}

std::string format_trace(const ProtocolTrace& trace) {
    std::string text;
    for (const auto& message : trace) {
        text += format_trace_line(message);
        text += '\n';
    }
    return text;
}

}  // namespace provsim
