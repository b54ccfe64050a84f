#pragma once

// JSON renderings of checker reports, tables and the verification suite.

#include <string>
#include <vector>

#include <json.hpp>

#include "cat1/cat1_checker.hpp"
#include "cat1/sphere_geom.hpp"
#include "cat1/verify.hpp"

namespace cat1::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

inline json meta(const std::string& command, json config) {
    return json{{"schema_version", kSchemaVersion},
                {"tool", "cat1"},
                {"tool_version", kToolVersion},
                {"command", command},
                {"config", std::move(config)}};
}

inline json to_json(const checker::Witness& w) {
    json j{{"kind", w.kind}, {"vertices", w.vertices}};
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

inline json to_json(const checker::ConditionResult& c) {
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    return json{{"id", c.id},
                {"name", c.name},
                {"status", checker::status_name(c.status)},
                {"checked", c.checked},
                {"witness_total", c.witness_total},
                {"witnesses", std::move(ws)}};
}

inline json to_json(const checker::CheckReport& r) {
    json cs = json::array();
    for (const auto& c : r.conditions) cs.push_back(to_json(c));
    return json{{"conditions", std::move(cs)}, {"verdict", checker::status_name(r.verdict())}};
}

inline json triples_json(const std::vector<sphere::ShortTriple>& t) {
    json rows = json::array();
    for (const auto& x : t)
        rows.push_back(json{{"n_alpha", x.n_alpha},
                            {"n_beta", x.n_beta},
                            {"n_delta", x.n_delta},
                            {"sum", sphere::weighted_length(x)},
                            {"cycle_length", 2 * sphere::weighted_length(x)}});
    return rows;
}

inline json to_json(const verify::Criterion& c, bool timings) {
    json facts = json::object();
    for (const auto& [k, v] : c.facts) facts[k] = v;
    json j{{"id", c.id}, {"name", c.name}, {"status", c.status()}, {"facts", std::move(facts)},
           {"failures", c.failures}};
    if (timings) j["seconds"] = c.seconds;
    return j;
}

}  // namespace cat1::report
