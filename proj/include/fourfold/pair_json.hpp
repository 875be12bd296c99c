#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/pair.hpp"

namespace fourfold {

using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& why) {
    raise("SchemaError", path + ": " + why);
}

// exact integers only: JSON integers or decimal strings; floats are rejected
inline Int json_to_int(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            schema_fail(path, "not a decimal integer string");
        }
    }
    if (v.is_number_float()) schema_fail(path, "floating point is not allowed in pair specs");
    schema_fail(path, "expected an integer");
}

inline json int_to_json(const Int& v) {
    if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

inline const json& member(const json& v, const std::string& key, const std::string& path) {
    if (!v.is_object()) schema_fail(path, "expected an object");
    auto it = v.find(key);
    if (it == v.end()) schema_fail(path + "." + key, "missing field");
    return *it;
}

inline std::string string_member(const json& v, const std::string& key, const std::string& path) {
    const json& m = member(v, key, path);
    if (!m.is_string()) schema_fail(path + "." + key, "expected a string");
    return m.get<std::string>();
}

inline long int_member(const json& v, const std::string& key, const std::string& path) {
    const json& m = member(v, key, path);
    if (!m.is_number_integer()) schema_fail(path + "." + key, "expected an integer");
    return m.get<long>();
}

inline AmbientModel parse_ambient(const json& v, const std::string& path) {
    std::string kind = string_member(v, "kind", path);
    if (kind == "projective") return AmbientModel::projective(static_cast<int>(int_member(v, "n", path)));
    if (kind == "product")
        return AmbientModel::product(static_cast<int>(int_member(v, "a", path)),
                                     static_cast<int>(int_member(v, "b", path)));
    if (kind == "grassmannian")
        return AmbientModel::grassmannian(static_cast<int>(int_member(v, "l", path)),
                                          static_cast<int>(int_member(v, "n", path)));
    schema_fail(path + ".kind", "unknown ambient kind " + kind);
}

inline json ambient_to_json(const AmbientModel& V) {
    switch (V.kind()) {
        case AmbientModel::Kind::Projective: return {{"kind", "projective"}, {"n", V.n()}};
        case AmbientModel::Kind::Product: return {{"kind", "product"}, {"a", V.a()}, {"b", V.b()}};
        case AmbientModel::Kind::Grassmannian:
            return {{"kind", "grassmannian"}, {"l", V.gr_l()}, {"n", V.gr_n()}};
    }
    return {};
}

inline BundleExpr parse_bundle(const json& v, const std::string& path) {
    std::string op = string_member(v, "op", path);
    if (op == "taut_sub") return BundleExpr::taut_sub();
    if (op == "taut_dual_sub") return BundleExpr::taut_dual_sub();
    if (op == "taut_quot") return BundleExpr::taut_quot();
    if (op == "line_bundle") {
        const json& degs = member(v, "degrees", path);
        if (!degs.is_array()) schema_fail(path + ".degrees", "expected an array");
        std::vector<Int> out;
        for (size_t i = 0; i < degs.size(); ++i)
            out.push_back(json_to_int(degs[i], path + ".degrees[" + std::to_string(i) + "]"));
        return BundleExpr::line_bundle(std::move(out));
    }
    if (op == "dual") return BundleExpr::dual(parse_bundle(member(v, "of", path), path + ".of"));
    if (op == "direct_sum" || op == "tensor") {
        const char* key = op == "direct_sum" ? "summands" : "factors";
        const json& kids = member(v, key, path);
        if (!kids.is_array() || kids.empty())
            schema_fail(path + "." + key, "expected a nonempty array");
        std::vector<BundleExpr> parts;
        for (size_t i = 0; i < kids.size(); ++i)
            parts.push_back(parse_bundle(kids[i], path + "." + key + "[" + std::to_string(i) + "]"));
        if (op == "direct_sum") return BundleExpr::direct_sum(std::move(parts));
        BundleExpr acc = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) acc = BundleExpr::tensor(acc, parts[i]);
        return acc;
    }
    if (op == "sym" || op == "wedge") {
        int k = static_cast<int>(int_member(v, "k", path));
        BundleExpr base = parse_bundle(member(v, "of", path), path + ".of");
        return op == "sym" ? BundleExpr::sym(k, std::move(base))
                           : BundleExpr::wedge(k, std::move(base));
    }
    schema_fail(path + ".op", "unknown bundle op " + op);
}

inline json bundle_to_json(const BundleExpr& e) {
    using Node = BundleExpr::Node;
    switch (e.node) {
        case Node::TautSub: return {{"op", "taut_sub"}};
        case Node::TautDualSub: return {{"op", "taut_dual_sub"}};
        case Node::TautQuot: return {{"op", "taut_quot"}};
        case Node::LineBundle: {
            json degs = json::array();
            for (const auto& d : e.degrees) degs.push_back(int_to_json(d));
            return {{"op", "line_bundle"}, {"degrees", degs}};
        }
        case Node::Dual: return {{"op", "dual"}, {"of", bundle_to_json(e.children[0])}};
        case Node::DirectSum: {
            json kids = json::array();
            for (const auto& c : e.children) kids.push_back(bundle_to_json(c));
            return {{"op", "direct_sum"}, {"summands", kids}};
        }
        case Node::Tensor: {
            json kids = json::array();
            for (const auto& c : e.children) kids.push_back(bundle_to_json(c));
            return {{"op", "tensor"}, {"factors", kids}};
        }
        case Node::Sym: return {{"op", "sym"}, {"k", e.k}, {"of", bundle_to_json(e.children[0])}};
        case Node::Wedge:
            return {{"op", "wedge"}, {"k", e.k}, {"of", bundle_to_json(e.children[0])}};
    }
    return {};
}

// "c1^2*c2" -> exponents over `names`; empty optional when a factor is not a
// listed generator (such keys are carried as extras)
inline std::optional<std::vector<int>> try_parse_monomial(const std::string& key,
                                                          const std::vector<std::string>& names) {
    std::vector<int> exps(names.size(), 0);
    size_t pos = 0;
    while (pos < key.size()) {
        size_t star = key.find('*', pos);
        std::string factor = key.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? key.size() : star + 1;
        size_t caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(factor.substr(caret + 1));
            } catch (...) {
                return std::nullopt;
            }
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) return std::nullopt;
        exps[it - names.begin()] += exp;
    }
    return exps;
}

inline std::string monomial_key(const std::vector<int>& exps,
                                const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

inline DegreeOracle parse_oracle(const json& v, const AmbientModel& V, const std::string& path) {
    DegreeOracle oracle;
    auto gens = oracle_generators(V);
    const json& table = member(v, "table", path);
    if (!table.is_object()) schema_fail(path + ".table", "expected an object");
    for (const auto& [key, val] : table.items()) {
        auto exps = try_parse_monomial(key, gens.names);
        if (exps) {
            int weight = 0;
            for (size_t i = 0; i < exps->size(); ++i) weight += (*exps)[i] * gens.weights[i];
            if (weight == 4) {
                oracle.table[*exps] = json_to_int(val, path + ".table." + key);
                continue;
            }
        }
        oracle.extras[key] = json_to_int(val, path + ".table." + key);
    }
    const json& c2t = member(v, "c2_tangent", path);
    if (!c2t.is_object()) schema_fail(path + ".c2_tangent", "expected an object");
    for (const auto& [key, val] : c2t.items()) {
        auto exps = try_parse_monomial(key, gens.names);
        if (!exps) schema_fail(path + ".c2_tangent." + key, "not a monomial in the generators");
        int weight = 0;
        for (size_t i = 0; i < exps->size(); ++i) weight += (*exps)[i] * gens.weights[i];
        if (weight != 2) schema_fail(path + ".c2_tangent." + key, "must have weight 2");
        oracle.c2_tangent[*exps] = json_to_int(val, path + ".c2_tangent." + key);
    }
    // every weight-4 monomial in the generators must be present
    std::function<void(std::vector<int>&, size_t, int)> require =
        [&](std::vector<int>& exps, size_t pos, int rest) {
            if (pos == gens.names.size()) {
                if (rest == 0 && !oracle.table.count(exps))
                    raise("OracleIncomplete",
                          "missing oracle degree for " + monomial_key(exps, gens.names));
                return;
            }
            for (int e = 0; e * gens.weights[pos] <= rest; ++e) {
                exps[pos] = e;
                require(exps, pos + 1, rest - e * gens.weights[pos]);
            }
            exps[pos] = 0;
        };
    std::vector<int> exps(gens.names.size(), 0);
    require(exps, 0, 4);
    return oracle;
}

}  // namespace detail

inline PairSpec parse_pair_spec(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        raise("SchemaError", std::string("invalid JSON: ") + e.what());
    }
    std::string name = detail::string_member(doc, "name", "$");
    AmbientModel ambient = detail::parse_ambient(detail::member(doc, "ambient", "$"), "$.ambient");

    const json& cons = detail::member(doc, "construction", "$");
    std::string type = detail::string_member(cons, "type", "$.construction");
    PairSpec pair{name, ambient, CompleteIntersection{}, {}, ""};
    if (doc.contains("description") && doc["description"].is_string())
        pair.description = doc["description"].get<std::string>();

    if (type == "complete_intersection") {
        const json& degs = detail::member(cons, "degrees", "$.construction");
        if (!degs.is_array() || degs.empty())
            detail::schema_fail("$.construction.degrees", "expected a nonempty array");
        CompleteIntersection ci;
        for (size_t i = 0; i < degs.size(); ++i) {
            std::string path = "$.construction.degrees[" + std::to_string(i) + "]";
            const json& row = degs[i];
            if (!row.is_array()) detail::schema_fail(path, "expected an array of degrees");
            std::vector<Int> d;
            for (size_t j = 0; j < row.size(); ++j)
                d.push_back(detail::json_to_int(row[j], path + "[" + std::to_string(j) + "]"));
            ci.degrees.push_back(std::move(d));
        }
        detail::check_ci_calabi_yau(ambient, ci);  // NotCalabiYau surfaces at parse time
        pair.construction = std::move(ci);
    } else if (type == "zero_locus") {
        ZeroLocus zl{detail::parse_bundle(detail::member(cons, "bundle", "$.construction"),
                                          "$.construction.bundle")};
        FormalBundle fb = realize(zl.normal, ambient);
        if (fb.rank() != ambient.dimension() - 4)
            raise("RankMismatch", "normal bundle rank " + std::to_string(fb.rank()) +
                                      " differs from codimension " +
                                      std::to_string(ambient.dimension() - 4));
        pair.construction = std::move(zl);
    } else if (type == "degree_oracle") {
        pair.construction = detail::parse_oracle(cons, ambient, "$.construction");
    } else {
        detail::schema_fail("$.construction.type", "unknown construction type " + type);
    }

    if (doc.contains("fixtures")) {
        const json& fx = doc["fixtures"];
        if (fx.contains("surfaces")) {
            const json& arr = fx["surfaces"];
            if (!arr.is_array()) detail::schema_fail("$.fixtures.surfaces", "expected an array");
            for (size_t i = 0; i < arr.size(); ++i) {
                std::string path = "$.fixtures.surfaces[" + std::to_string(i) + "]";
                const json& s = arr[i];
                SurfaceFixture out;
                out.label = detail::string_member(s, "label", path);
                for (const auto& a : detail::member(s, "alpha", path))
                    out.alpha.push_back(detail::json_to_int(a, path + ".alpha"));
                out.c1_sq = detail::json_to_int(detail::member(s, "c1_sq", path), path + ".c1_sq");
                out.c2 = detail::json_to_int(detail::member(s, "c2", path), path + ".c2");
                if (s.contains("hodge")) {
                    const json& h = s["hodge"];
                    if (!h.is_array() || h.size() != 3)
                        detail::schema_fail(path + ".hodge", "expected [h0, h1, h2]");
                    out.hodge = std::array<Int, 3>{detail::json_to_int(h[0], path + ".hodge"),
                                                   detail::json_to_int(h[1], path + ".hodge"),
                                                   detail::json_to_int(h[2], path + ".hodge")};
                }
                pair.fixtures.push_back(std::move(out));
            }
        }
    }
    return pair;
}

inline json pair_spec_to_json(const PairSpec& pair) {
    json doc;
    doc["name"] = pair.name;
    if (!pair.description.empty()) doc["description"] = pair.description;
    doc["ambient"] = detail::ambient_to_json(pair.ambient);
    json cons;
    if (const auto* ci = std::get_if<CompleteIntersection>(&pair.construction)) {
        cons["type"] = "complete_intersection";
        json degs = json::array();
        for (const auto& row : ci->degrees) {
            json r = json::array();
            for (const auto& d : row) r.push_back(detail::int_to_json(d));
            degs.push_back(r);
        }
        cons["degrees"] = degs;
    } else if (const auto* zl = std::get_if<ZeroLocus>(&pair.construction)) {
        cons["type"] = "zero_locus";
        cons["bundle"] = detail::bundle_to_json(zl->normal);
    } else {
        const auto& oracle = std::get<DegreeOracle>(pair.construction);
        auto gens = detail::oracle_generators(pair.ambient);
        cons["type"] = "degree_oracle";
        json table;
        for (const auto& [exps, v] : oracle.table)
            table[detail::monomial_key(exps, gens.names)] = detail::int_to_json(v);
        for (const auto& [key, v] : oracle.extras) table[key] = detail::int_to_json(v);
        cons["table"] = table;
        json c2t;
        for (const auto& [exps, v] : oracle.c2_tangent)
            c2t[detail::monomial_key(exps, gens.names)] = detail::int_to_json(v);
        cons["c2_tangent"] = c2t;
    }
    doc["construction"] = cons;
    if (!pair.fixtures.empty()) {
        json arr = json::array();
        for (const auto& fx : pair.fixtures) {
            json s;
            s["label"] = fx.label;
            json alpha = json::array();
            for (const auto& a : fx.alpha) alpha.push_back(detail::int_to_json(a));
            s["alpha"] = alpha;
            s["c1_sq"] = detail::int_to_json(fx.c1_sq);
            s["c2"] = detail::int_to_json(fx.c2);
            if (fx.hodge) {
                json h = json::array();
                for (const auto& v : *fx.hodge) h.push_back(detail::int_to_json(v));
                s["hodge"] = h;
            }
            arr.push_back(s);
        }
        doc["fixtures"] = {{"surfaces", arr}};
    }
    return doc;
}

}  // namespace fourfold
