#pragma once

#include "zslab/group.hpp"
#include "zslab/invariants.hpp"
#include "zslab/rational.hpp"
#include "zslab/sequence.hpp"
#include "zslab/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace zslab {

// Runtime configuration shared by the CLI and the report payloads.
struct Config {
    std::int64_t group_cap = kDefaultGroupCap;
    std::int64_t oracle_len_cap = kDefaultOracleLenCap;
    int threads = 1;
    std::string output = "json"; // json | csv | table
    std::uint64_t seed = 1;

    SolveOptions solve_options() const {
        SolveOptions o;
        o.group_cap = group_cap;
        o.oracle_len_cap = oracle_len_cap;
        o.threads = threads;
        return o;
    }
};

using json = nlohmann::json;

// Values are exact {num, den} integer pairs, never decimal strings.
inline json to_json(const Rational& r) {
    return json{{"num", std::stoll(r.num().str())}, {"den", std::stoll(r.den().str())}};
}

inline json to_json(const GroupElement& g) {
    json a = json::array();
    for (auto c : g.coords)
        a.push_back(c);
    return a;
}

// Sequence literal: list of [coords, multiplicity] pairs in canonical
// (linear index) order, e.g. [[[1,0],2],[[0,1],1]].
inline json to_json(const Sequence& s) {
    json a = json::array();
    for (const auto& [idx, m] : s.terms())
        a.push_back(json::array({to_json(s.group().element_at(idx)), m}));
    return a;
}

inline Sequence sequence_from_json(const GroupSpec& G, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("sequence literal: expected array");
    Sequence s(G);
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_array())
            throw std::invalid_argument("sequence literal: expected [coords, mult] pairs");
        GroupElement g;
        for (const auto& c : item[0])
            g.coords.push_back(c.get<std::int64_t>());
        s.add(g, item[1].get<std::int64_t>());
    }
    return s;
}

inline Sequence parse_sequence(const GroupSpec& G, const std::string& text) {
    return sequence_from_json(G, json::parse(text));
}

inline json to_json(const Config& c) {
    return json{{"group_cap", c.group_cap},
                {"oracle_len_cap", c.oracle_len_cap},
                {"threads", c.threads},
                {"output", c.output},
                {"seed", c.seed}};
}

inline json to_json(const SolveResult& r, const GroupSpec& G, const Config& cfg) {
    json j{{"objective", objective_name(r.objective)},
           {"group", G.str()},
           {"weight", r.weight.name()},
           {"value", to_json(r.value)},
           {"witness", to_json(r.witness)},
           {"nodes_explored", r.nodes_explored},
           {"elapsed_ms", r.elapsed_ms},
           {"config", to_json(cfg)}};
    if (!r.blocks.empty()) {
        json b = json::array();
        for (const auto& u : r.blocks)
            b.push_back(to_json(u));
        j["blocks"] = b;
    }
    return j;
}

inline json to_json(const WidenessReport& w, const Config& cfg) {
    return json{{"p", w.p},
                {"n", w.n},
                {"variant", w.two_wide ? "two_wide" : "wide"},
                {"lhs", to_json(w.lhs)},
                {"rhs", to_json(w.rhs)},
                {"holds", w.holds},
                {"config", to_json(cfg)}};
}

inline json to_json(const CheckReport& r, const Config& cfg) {
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    json details = json::object();
    for (const auto& [k, v] : r.details)
        details[k] = v;
    json wit = json::array();
    for (const auto& s : r.witnesses)
        wit.push_back(to_json(s));
    return json{{"check_id", r.check_id},
                {"params", params},
                {"status", check_status_name(r.status)},
                {"value_lhs", to_json(r.lhs)},
                {"value_rhs", to_json(r.rhs)},
                {"witnesses", wit},
                {"details", details},
                {"nodes_explored", r.nodes_explored},
                {"elapsed_ms", r.elapsed_ms},
                {"config", to_json(cfg)}};
}

// One row per result for spreadsheet-driven tables.
inline std::string csv_header_solve() {
    return "objective,group,weight,value_num,value_den,witness,nodes_explored,elapsed_ms";
}

inline std::string to_csv(const SolveResult& r, const GroupSpec& G) {
    return std::string(objective_name(r.objective)) + ",\"" + G.str() + "\"," +
           r.weight.name() + "," + r.value.num().str() + "," + r.value.den().str() + ",\"" +
           r.witness.str() + "\"," + std::to_string(r.nodes_explored) + "," +
           std::to_string(r.elapsed_ms);
}

inline std::string csv_header_check() {
    return "check_id,status,lhs_num,lhs_den,rhs_num,rhs_den,nodes_explored,elapsed_ms";
}

inline std::string to_csv(const CheckReport& r) {
    return r.check_id + "," + check_status_name(r.status) + "," + r.lhs.num().str() + "," +
           r.lhs.den().str() + "," + r.rhs.num().str() + "," + r.rhs.den().str() + "," +
           std::to_string(r.nodes_explored) + "," + std::to_string(r.elapsed_ms);
}

} // namespace zslab
