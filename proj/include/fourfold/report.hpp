#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourfold/lattice.hpp"
#include "fourfold/pair_json.hpp"
#include "fourfold/qform.hpp"

namespace fourfold {

inline constexpr const char* kToolName = "fourfold-ledger";
inline constexpr const char* kToolVersion = "0.1.0";

// Everything a subcommand reports about a pair: the derived quadratic
// function, the decency verdict with witness, the minimum when it exists,
// and the subcommand-specific results. Serializes losslessly to JSON with
// integers beyond 64 bits written as decimal strings.
struct Report {
    std::string command;
    std::string pair;
    std::string description;
    std::string ambient;
    std::vector<std::string> basis;
    std::vector<std::vector<Int>> gram;
    std::vector<Int> linear;
    std::string q_rendered;
    bool decent = false;
    std::vector<Int> decency_minors;
    int decency_failing = 0;
    std::optional<Minimum> minimum;
    json results = json::object();

    friend bool operator==(const Report& a, const Report& b) {
        auto key = [](const Report& r) {
            return std::tie(r.command, r.pair, r.description, r.ambient, r.basis, r.gram,
                            r.linear, r.q_rendered, r.decent, r.decency_minors,
                            r.decency_failing);
        };
        if (key(a) != key(b) || a.results != b.results) return false;
        if (a.minimum.has_value() != b.minimum.has_value()) return false;
        if (a.minimum && (a.minimum->vertex != b.minimum->vertex ||
                          a.minimum->value != b.minimum->value))
            return false;
        return true;
    }
};

namespace detail {

inline json rat_to_json(const Rat& r) { return json(to_string(r)); }

inline Rat json_to_rat(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            Rat r(v.get<std::string>());
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            schema_fail(path, "not a rational string");
        }
    }
    schema_fail(path, "expected a rational");
}

}  // namespace detail

inline json report_to_json(const Report& r) {
    json out;
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["command"] = r.command;
    out["pair"] = r.pair;
    if (!r.description.empty()) out["description"] = r.description;
    out["ambient"] = r.ambient;
    out["basis"] = r.basis;
    json gram = json::array();
    for (const auto& row : r.gram) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(detail::int_to_json(v));
        gram.push_back(jrow);
    }
    out["gram"] = gram;
    json lin = json::array();
    for (const auto& v : r.linear) lin.push_back(detail::int_to_json(v));
    out["linear"] = lin;
    out["q"] = r.q_rendered;
    out["decent"] = r.decent;
    json minors = json::array();
    for (const auto& v : r.decency_minors) minors.push_back(detail::int_to_json(v));
    out["decency"] = {{"leading_minors", minors}, {"failing", r.decency_failing}};
    if (r.minimum) {
        json vertex = json::array();
        for (const auto& v : r.minimum->vertex) vertex.push_back(detail::rat_to_json(v));
        out["minimum"] = {{"vertex", vertex}, {"value", detail::rat_to_json(r.minimum->value)}};
    }
    out["results"] = r.results;
    return out;
}

inline Report report_from_json(const json& doc) {
    Report r;
    r.command = detail::string_member(doc, "command", "$");
    r.pair = detail::string_member(doc, "pair", "$");
    if (doc.contains("description")) r.description = doc["description"].get<std::string>();
    r.ambient = detail::string_member(doc, "ambient", "$");
    for (const auto& b : detail::member(doc, "basis", "$")) r.basis.push_back(b.get<std::string>());
    for (const auto& row : detail::member(doc, "gram", "$")) {
        std::vector<Int> out;
        for (const auto& v : row) out.push_back(detail::json_to_int(v, "$.gram"));
        r.gram.push_back(std::move(out));
    }
    for (const auto& v : detail::member(doc, "linear", "$"))
        r.linear.push_back(detail::json_to_int(v, "$.linear"));
    r.q_rendered = detail::string_member(doc, "q", "$");
    r.decent = detail::member(doc, "decent", "$").get<bool>();
    const json& dec = detail::member(doc, "decency", "$");
    for (const auto& v : detail::member(dec, "leading_minors", "$.decency"))
        r.decency_minors.push_back(detail::json_to_int(v, "$.decency.leading_minors"));
    r.decency_failing = static_cast<int>(detail::int_member(dec, "failing", "$.decency"));
    if (doc.contains("minimum")) {
        Minimum m;
        const json& mj = doc["minimum"];
        for (const auto& v : detail::member(mj, "vertex", "$.minimum"))
            m.vertex.push_back(detail::json_to_rat(v, "$.minimum.vertex"));
        m.value = detail::json_to_rat(detail::member(mj, "value", "$.minimum"), "$.minimum.value");
        r.minimum = std::move(m);
    }
    if (doc.contains("results")) r.results = doc["results"];
    return r;
}

}  // namespace fourfold
