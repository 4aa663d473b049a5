#pragma once

#include <string>

#include <json.hpp>

#include "bcinv/harness.hpp"
#include "bcinv/inverses.hpp"
#include "bcinv/miner.hpp"
#include "bcinv/subset.hpp"

namespace bcinv {

inline constexpr int kRecordSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

/// First line of every structured stream. Carries everything that may vary
/// between otherwise identical runs (timestamp, thread count); the records
/// that follow are reproducible byte for byte.
inline json make_header(const std::string& command, const std::string& timestamp,
                        unsigned threads) {
    json j;
    j["record"] = "header";
    j["schema"] = kRecordSchema;
    j["tool"] = "bcinv";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["timestamp"] = timestamp;
    j["threads"] = threads;
    return j;
}

inline json to_record(const PropertyReport& r) {
    json j;
    j["record"] = "property-report";
    j["theorem"] = r.theorem;
    j["ring"] = r.ring;
    j["instances"] = r.instances;
    j["passes"] = r.passes;
    j["failures"] = r.failures;
    j["vacuous"] = r.vacuous;
    j["status"] = r.pass() ? "pass" : "fail";
    if (r.first_counterexample) {
        json ce;
        ce["detail"] = r.first_counterexample->detail;
        json inputs = json::object();
        for (const auto& [name, idx] : r.first_counterexample->inputs) inputs[name] = idx;
        ce["inputs"] = inputs;
        j["first_counterexample"] = ce;
    } else {
        j["first_counterexample"] = nullptr;
    }
    // Wall time deliberately omitted: records must replay identically.
    return j;
}

inline json to_record(const Ring& ring, const std::string& kind,
                      const std::vector<std::pair<std::string, index_t>>& inputs,
                      const InverseResult& res) {
    json j;
    j["record"] = "inverse-result";
    j["ring"] = ring.spec_string();
    j["kind"] = kind;
    json in = json::object();
    for (const auto& [name, idx] : inputs) {
        in[name] = json{{"index", idx}, {"literal", ring.format_element(idx)}};
    }
    j["inputs"] = in;
    j["status"] = res.found() ? "found" : "not-found";
    if (res.found()) {
        j["value"] = json{{"index", res.value}, {"literal", ring.format_element(res.value)}};
        j["method"] = to_string(res.method);
        json wits = json::object();
        for (const Witness& w : res.witnesses) wits[w.label] = w.value;
        j["witnesses"] = wits;
    }
    return j;
}

inline json to_record(const Ring& ring, const MinerWitness& w) {
    json j;
    j["record"] = "witness";
    j["ring"] = w.ring;
    j["a"] = json{{"index", w.a}, {"literal", ring.format_element(w.a)}};
    j["b"] = json{{"index", w.b}, {"literal", ring.format_element(w.b)}};
    j["c"] = json{{"index", w.c}, {"literal", ring.format_element(w.c)}};
    j["t"] = json{{"index", w.t}, {"literal", ring.format_element(w.t)}};
    if (w.y != kNoIndex)
        j["y"] = json{{"index", w.y}, {"literal", ring.format_element(w.y)}};
    j["t_regular"] = w.t_regular;
    j["b_regular"] = w.b_regular;
    j["c_regular"] = w.c_regular;
    return j;
}

inline json to_record(const MinerReport& r) {
    json j;
    j["record"] = "mine-summary";
    j["target"] = r.target;
    j["family"] = r.family;
    j["max_n"] = r.max_n;
    j["rings"] = r.rings;
    j["instances"] = r.instances;
    j["witnesses"] = r.witness_count;
    j["status"] = r.none_found() ? "none-found" : "witnesses-found";
    j["budget_exhausted"] = r.budget_exhausted;
    // Finite sweeps cannot refute statements about infinite rings.
    j["exploratory"] = true;
    return j;
}

inline json to_record(const Subset& s, const std::string& name) {
    json j;
    j["name"] = name;
    j["indices"] = s.indices();
    return j;
}

}  // namespace bcinv
