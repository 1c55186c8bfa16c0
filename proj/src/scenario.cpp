#include "provsim/scenario.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace provsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& why) {
    throw ScenarioError(where + ": " + why);
}

void check_keys(const json& object, const std::string& where,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : object.items())
        if (!allowed.count(key)) fail(where + "." + key, "unknown key");
}

double get_number(const json& object, const std::string& where,
                  const std::string& key, double fallback, bool required = false) {
    if (!object.contains(key)) {
        if (required) fail(where + "." + key, "missing required field");
        return fallback;
    }
    const json& value = object.at(key);
    if (!value.is_number()) fail(where + "." + key, "expected a number");
    return value.get<double>();
}

std::uint64_t get_u64(const json& object, const std::string& where,
                      const std::string& key, std::uint64_t fallback,
                      bool required = false) {
    if (!object.contains(key)) {
        if (required) fail(where + "." + key, "missing required field");
        return fallback;
    }
    const json& value = object.at(key);
    if (!value.is_number_unsigned()) fail(where + "." + key, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

int get_int(const json& object, const std::string& where, const std::string& key,
            int fallback, bool required = false) {
    if (!object.contains(key)) {
        if (required) fail(where + "." + key, "missing required field");
        return fallback;
    }
    const json& value = object.at(key);
    if (!value.is_number_integer()) fail(where + "." + key, "expected an integer");
    return value.get<int>();
}

// Ids appear verbatim in trace lines, so keep them to a shell-safe alphabet.
std::string get_id(const json& object, const std::string& where, const std::string& key) {
    if (!object.contains(key)) fail(where + "." + key, "missing required field");
    const json& value = object.at(key);
    if (!value.is_string()) fail(where + "." + key, "expected a string");
    const std::string id = value.get<std::string>();
    if (id.empty()) fail(where + "." + key, "must be non-empty");
    for (const char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) fail(where + "." + key, "id '" + id + "' may only use [A-Za-z0-9_.-]");
    }
    return id;
}

ResourceSpec parse_spec(const json& object, const std::string& where) {
    check_keys(object, where,
               {"pe_count", "mips_per_pe", "ram_mb", "storage_mb", "bandwidth_mbps"});
    ResourceSpec spec;
    spec.pe_count = get_int(object, where, "pe_count", spec.pe_count);
    spec.mips_per_pe = get_number(object, where, "mips_per_pe", spec.mips_per_pe);
    spec.ram_mb = get_number(object, where, "ram_mb", spec.ram_mb);
    spec.storage_mb = get_number(object, where, "storage_mb", spec.storage_mb);
    spec.bandwidth_mbps = get_number(object, where, "bandwidth_mbps", spec.bandwidth_mbps);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    return spec;
}

json spec_to_json(const ResourceSpec& spec) {
    return json{{"pe_count", spec.pe_count},
                {"mips_per_pe", spec.mips_per_pe},
                {"ram_mb", spec.ram_mb},
                {"storage_mb", spec.storage_mb},
                {"bandwidth_mbps", spec.bandwidth_mbps}};
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario syntax: ") + e.what());
    }
    if (!document.is_object()) fail("scenario", "top level must be an object");
    check_keys(document, "scenario",
               {"owners", "links", "workload", "vmm", "scoring", "cost_weights"});

    ScenarioConfig config;

    if (!document.contains("owners") || !document.at("owners").is_array())
        fail("scenario.owners", "missing required array");
    if (!document.contains("links") || !document.at("links").is_array())
        fail("scenario.links", "missing required array");

    // Links first, so owners can be wired as they parse.
    std::map<OwnerId, NetworkLink> links;
    std::size_t link_index = 0;
    for (const json& item : document.at("links")) {
        const std::string where = "links[" + std::to_string(link_index++) + "]";
        if (!item.is_object()) fail(where, "expected an object");
        check_keys(item, where, {"owner_id", "hops_count", "bandwidth_mbps", "delay_ms"});
        NetworkLink link;
        link.owner_id = get_id(item, where, "owner_id");
        link.hops_count = get_int(item, where, "hops_count", link.hops_count);
        link.bandwidth_mbps = get_number(item, where, "bandwidth_mbps", link.bandwidth_mbps);
        link.delay_ms = get_number(item, where, "delay_ms", link.delay_ms);
        try {
            link.validate();
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
        if (!links.emplace(link.owner_id, link).second)
            fail(where, "duplicate link for owner '" + link.owner_id + "'");
    }

    std::set<OwnerId> owner_ids;
    std::set<ResourceId> resource_ids;
    std::size_t owner_index = 0;
    for (const json& item : document.at("owners")) {
        const std::string where = "owners[" + std::to_string(owner_index++) + "]";
        if (!item.is_object()) fail(where, "expected an object");
        check_keys(item, where, {"owner_id", "resources"});
        OwnerCatalog owner;
        owner.owner_id = get_id(item, where, "owner_id");
        if (!owner_ids.insert(owner.owner_id).second)
            fail(where + ".owner_id", "duplicate owner_id '" + owner.owner_id + "'");
        const auto link = links.find(owner.owner_id);
        if (link == links.end())
            fail(where, "owner '" + owner.owner_id + "' has no link");
        owner.link = link->second;
        links.erase(link);

        if (!item.contains("resources") || !item.at("resources").is_array())
            fail(where + ".resources", "missing required array");
        std::size_t resource_index = 0;
        for (const json& res : item.at("resources")) {
            const std::string rwhere =
                where + ".resources[" + std::to_string(resource_index++) + "]";
            if (!res.is_object()) fail(rwhere, "expected an object");
            check_keys(res, rwhere,
                       {"resource_id", "pe_count", "mips_per_pe", "ram_mb", "storage_mb",
                        "bandwidth_mbps", "resource_cost"});
            OwnedResource resource;
            resource.resource_id = get_id(res, rwhere, "resource_id");
            if (!resource_ids.insert(resource.resource_id).second)
                fail(rwhere + ".resource_id",
                     "duplicate resource_id '" + resource.resource_id + "'");
            resource.owner_id = owner.owner_id;
            resource.spec.pe_count = get_int(res, rwhere, "pe_count", 1, true);
            resource.spec.mips_per_pe = get_number(res, rwhere, "mips_per_pe", 0, true);
            resource.spec.ram_mb = get_number(res, rwhere, "ram_mb", 0, true);
            resource.spec.storage_mb = get_number(res, rwhere, "storage_mb", 0.0);
            resource.spec.bandwidth_mbps = get_number(res, rwhere, "bandwidth_mbps", 0, true);
            resource.resource_cost = get_number(res, rwhere, "resource_cost", 0, true);
            try {
                resource.validate();
            } catch (const std::invalid_argument& e) {
                fail(rwhere, e.what());
            }
            owner.resources.push_back(std::move(resource));
        }
        config.owners.push_back(std::move(owner));
    }
    if (config.owners.empty()) fail("scenario.owners", "at least one owner is required");
    if (!links.empty())
        fail("scenario.links", "link for unknown owner '" + links.begin()->first + "'");

    if (document.contains("workload")) {
        const json& w = document.at("workload");
        const std::string where = "workload";
        if (!w.is_object()) fail(where, "expected an object");
        check_keys(w, where,
                   {"num_cloudlets", "mean_interarrival_s", "length_mi_min", "length_mi_max",
                    "payload_mb_min", "payload_mb_max", "seed"});
        config.workload.num_cloudlets =
            get_u64(w, where, "num_cloudlets", config.workload.num_cloudlets);
        config.workload.mean_interarrival_s =
            get_number(w, where, "mean_interarrival_s", config.workload.mean_interarrival_s);
        config.workload.length_mi_min =
            get_number(w, where, "length_mi_min", config.workload.length_mi_min);
        config.workload.length_mi_max =
            get_number(w, where, "length_mi_max", config.workload.length_mi_min);
        config.workload.payload_mb_min =
            get_number(w, where, "payload_mb_min", config.workload.payload_mb_min);
        config.workload.payload_mb_max =
            get_number(w, where, "payload_mb_max", config.workload.payload_mb_min);
        config.workload.seed = get_u64(w, where, "seed", config.workload.seed);
        try {
            config.workload.validate();
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }

    if (document.contains("vmm")) {
        const json& v = document.at("vmm");
        const std::string where = "vmm";
        if (!v.is_object()) fail(where, "expected an object");
        check_keys(v, where,
                   {"initial_vms", "high_watermark", "low_watermark", "vm_request_spec"});
        config.vmm.initial_vms = get_u64(v, where, "initial_vms", config.vmm.initial_vms);
        config.vmm.high_watermark =
            get_number(v, where, "high_watermark", config.vmm.high_watermark);
        config.vmm.low_watermark =
            get_number(v, where, "low_watermark", config.vmm.low_watermark);
        if (!(config.vmm.low_watermark >= 0) ||
            !(config.vmm.low_watermark < config.vmm.high_watermark))
            fail(where + ".low_watermark", "must satisfy 0 <= low_watermark < high_watermark");
        if (v.contains("vm_request_spec"))
            config.vmm.vm_request_spec = parse_spec(v.at("vm_request_spec"),
                                                    where + ".vm_request_spec");
    }

    if (document.contains("scoring")) {
        const json& s = document.at("scoring");
        const std::string where = "scoring";
        if (!s.is_object()) fail(where, "expected an object");
        check_keys(s, where, {"beta", "ema_alpha", "reference_cloudlet_mi"});
        config.scoring.beta = get_number(s, where, "beta", config.scoring.beta);
        config.scoring.ema_alpha = get_number(s, where, "ema_alpha", config.scoring.ema_alpha);
        config.reference_cloudlet_mi =
            get_number(s, where, "reference_cloudlet_mi", config.reference_cloudlet_mi);
        try {
            config.scoring.validate();
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
        if (!(config.reference_cloudlet_mi > 0))
            fail(where + ".reference_cloudlet_mi", "must be > 0");
    }

    if (document.contains("cost_weights")) {
        const json& w = document.at("cost_weights");
        const std::string where = "cost_weights";
        if (!w.is_object()) fail(where, "expected an object");
        check_keys(w, where, {"w_hops", "w_delay", "w_transfer"});
        config.cost_weights.w_hops = get_number(w, where, "w_hops", config.cost_weights.w_hops);
        config.cost_weights.w_delay =
            get_number(w, where, "w_delay", config.cost_weights.w_delay);
        config.cost_weights.w_transfer =
            get_number(w, where, "w_transfer", config.cost_weights.w_transfer);
        try {
            config.cost_weights.validate();
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }

    return config;
}

std::string serialize_scenario(const ScenarioConfig& config) {
    json document;
    json owners = json::array();
    json links = json::array();
    for (const auto& owner : config.owners) {
        json resources = json::array();
        for (const auto& resource : owner.resources) {
            json r = spec_to_json(resource.spec);
            r["resource_id"] = resource.resource_id;
            r["resource_cost"] = resource.resource_cost;
            resources.push_back(std::move(r));
        }
        owners.push_back(json{{"owner_id", owner.owner_id}, {"resources", resources}});
        links.push_back(json{{"owner_id", owner.owner_id},
                             {"hops_count", owner.link.hops_count},
                             {"bandwidth_mbps", owner.link.bandwidth_mbps},
                             {"delay_ms", owner.link.delay_ms}});
    }
    document["owners"] = std::move(owners);
    document["links"] = std::move(links);
    document["workload"] = json{{"num_cloudlets", config.workload.num_cloudlets},
                                {"mean_interarrival_s", config.workload.mean_interarrival_s},
                                {"length_mi_min", config.workload.length_mi_min},
                                {"length_mi_max", config.workload.length_mi_max},
                                {"payload_mb_min", config.workload.payload_mb_min},
                                {"payload_mb_max", config.workload.payload_mb_max},
                                {"seed", config.workload.seed}};
    document["vmm"] = json{{"initial_vms", config.vmm.initial_vms},
                           {"high_watermark", config.vmm.high_watermark},
                           {"low_watermark", config.vmm.low_watermark},
                           {"vm_request_spec", spec_to_json(config.vmm.vm_request_spec)}};
    document["scoring"] = json{{"beta", config.scoring.beta},
                               {"ema_alpha", config.scoring.ema_alpha},
                               {"reference_cloudlet_mi", config.reference_cloudlet_mi}};
    document["cost_weights"] = json{{"w_hops", config.cost_weights.w_hops},
                                    {"w_delay", config.cost_weights.w_delay},
                                    {"w_transfer", config.cost_weights.w_transfer}};
    return document.dump(2) + "\n";
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ScenarioError("cannot read scenario file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_scenario(buffer.str());
}

}  // namespace provsim
