#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fourfold/cli.hpp"

using namespace fourfold;

namespace {

RunResult go(std::initializer_list<std::string> args) {
    return run(std::vector<std::string>(args));
}

json json_out(const RunResult& r) { return json::parse(r.output); }

}  // namespace

TEST_CASE("catalog lists exactly the expected pairs") {
    RunResult r = go({"catalog", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    std::vector<std::string> names;
    for (const auto& p : doc["pairs"]) names.push_back(p["name"].get<std::string>());
    CHECK(names == std::vector<std::string>{"sextic", "ci", "fano", "dv", "cicy41", "cicy130",
                                            "cicy133"});
}

TEST_CASE("derive fano as json") {
    RunResult r = go({"derive", "--pair", "fano", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    CHECK(doc["gram"] == json::parse("[[45,18],[18,27]]"));
    CHECK(doc["linear"] == json::parse("[171,9]"));
    CHECK(doc["decent"] == true);
    CHECK(doc["minimum"]["vertex"] == json::parse(R"(["5/2","-3/2"])"));
    CHECK(doc["minimum"]["value"] == "-207");
}

TEST_CASE("count the sextic sublevel at zero") {
    RunResult r = go({"count", "--pair", "sextic", "--max-invariant", "0", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    CHECK(doc["results"]["kind"] == "finite");
    CHECK(doc["results"]["count"] == 16);
}

TEST_CASE("plane thresholds against the debarre-voisin image") {
    RunResult r = go({"count", "--pair", "dv", "--chi", "1", "--k2", "9", "--representable",
                      "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    CHECK(doc["results"]["threshold"] == 6);
    CHECK(doc["results"]["representable"] == false);
}

TEST_CASE("divisibility certificate through the cli") {
    RunResult r = go({"representable", "--pair", "cicy41", "--lo", "2", "--hi", "6", "--format",
                      "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    CHECK(doc["results"]["representable"] == false);
    CHECK(doc["results"]["modulus"] == 30);
}

TEST_CASE("eval subcommand") {
    RunResult r = go({"eval", "--pair", "fano", "--at", "0,1", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    CHECK(json_out(r)["results"]["value"] == 18);
}

TEST_CASE("parametric ci pair") {
    RunResult r = go({"derive", "--pair", "ci", "--degrees", "2,5", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json doc = json_out(r);
    CHECK(doc["q"] == "10*x1^2 - 110*x1");
    RunResult missing = go({"derive", "--pair", "ci"});
    CHECK(missing.exit_code == 1);  // SchemaError: ci needs --degrees
}

TEST_CASE("json reports round-trip") {
    for (auto args : {std::vector<std::string>{"derive", "--pair", "dv", "--format", "json"},
                      std::vector<std::string>{"count", "--pair", "cicy133", "--chi", "-8",
                                               "--k2", "-16", "--method", "hyperbola",
                                               "--format", "json"}}) {
        RunResult r = run(args);
        REQUIRE(r.exit_code == 0);
        json doc = json_out(r);
        Report parsed = report_from_json(doc);
        CHECK(report_to_json(parsed) == doc);
        CHECK(parsed == report_from_json(report_to_json(parsed)));
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args = {"count", "--pair", "fano", "--max-chi", "1",
                                     "--format", "json"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(go({"count", "--pair", "sextic"}).exit_code == 2);  // no mode given
    CHECK(go({"count", "--pair", "sextic", "--max-invariant", "0", "--max-chi", "1"}).exit_code ==
          2);
    CHECK(go({"derive", "--no-such-flag"}).exit_code == 2);
    CHECK(go({"nonsense"}).exit_code == 2);
    CHECK(go({"count", "--pair", "cicy130", "--chi", "0", "--k2", "3"}).exit_code == 2);  // no method
}

TEST_CASE("domain errors exit with 1 and carry the error name") {
    RunResult r = go({"derive", "--pair", "nope", "--format", "json"});
    CHECK(r.exit_code == 1);
    CHECK(json_out(r)["error"]["name"] == "UnknownPair");

    RunResult pd = go({"count", "--pair", "cicy41", "--max-chi", "1", "--format", "json"});
    CHECK(pd.exit_code == 1);
    CHECK(json_out(pd)["error"]["name"] == "NotPositiveDefinite");
}

TEST_CASE("pair-spec documents parse to working pairs") {
    std::string doc = R"({
        "name": "sextic-doc",
        "ambient": {"kind": "projective", "n": 5},
        "construction": {"type": "complete_intersection", "degrees": [[6]]}
    })";
    PairSpec pair = parse_pair_spec(doc);
    QForm q = derive_qform(pair);
    CHECK(q.render() == "6*x1^2 - 90*x1");
}

TEST_CASE("calabi-yau violations surface at parse time") {
    std::string doc = R"({
        "name": "bad",
        "ambient": {"kind": "projective", "n": 6},
        "construction": {"type": "complete_intersection", "degrees": [[2],[2]]}
    })";
    CHECK_THROWS_AS(parse_pair_spec(doc), Error);
    try {
        parse_pair_spec(doc);
    } catch (const Error& e) {
        CHECK(e.name() == "NotCalabiYau");
    }
}

TEST_CASE("incomplete oracles surface at parse time") {
    std::string doc = R"({
        "name": "dv-like",
        "ambient": {"kind": "grassmannian", "l": 6, "n": 10},
        "construction": {
            "type": "degree_oracle",
            "table": {"c1^4": 1452, "c1^2*c2": 825},
            "c2_tangent": {"c1^2": 5, "c2": -8}
        }
    })";
    try {
        parse_pair_spec(doc);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "OracleIncomplete");
        CHECK(std::string(e.what()).find("c2^2") != std::string::npos);
    }
}

TEST_CASE("schema violations name the failing field") {
    try {
        parse_pair_spec(R"({"name": "x", "ambient": {"kind": "projective"}})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "SchemaError");
        CHECK(std::string(e.what()).find("$.ambient.n") != std::string::npos);
    }
    try {
        parse_pair_spec(R"({
            "name": "x",
            "ambient": {"kind": "projective", "n": 5},
            "construction": {"type": "complete_intersection", "degrees": [[6.5]]}
        })");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "SchemaError");
        CHECK(std::string(e.what()).find("floating point") != std::string::npos);
    }
}

TEST_CASE("catalog pairs survive a serialization round trip") {
    for (const auto& pair : builtin_catalog()) {
        json doc = pair_spec_to_json(pair);
        PairSpec back = parse_pair_spec(doc.dump());
        CHECK(back.name == pair.name);
        CHECK(derive_qform(back).render() == derive_qform(pair).render());
        CHECK(back.fixtures.size() == pair.fixtures.size());
    }
}

TEST_CASE("environment catalog directories are honored") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fourfold-test-catalog";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "octic.json");
        out << R"({
            "name": "octic",
            "description": "octic fourfold in a weighted flavor of P^6",
            "ambient": {"kind": "projective", "n": 6},
            "construction": {"type": "complete_intersection", "degrees": [[2],[5]]}
        })";
    }
    setenv("FOURFOLD_LEDGER_CATALOG", dir.c_str(), 1);
    RunResult cat = go({"catalog", "--format", "json"});
    REQUIRE(cat.exit_code == 0);
    json doc = json_out(cat);
    bool found = false;
    for (const auto& p : doc["pairs"]) found = found || p["name"] == "octic";
    CHECK(found);
    RunResult derive = go({"derive", "--pair", "octic", "--format", "json"});
    CHECK(derive.exit_code == 0);
    CHECK(json_out(derive)["q"] == "10*x1^2 - 110*x1");
    unsetenv("FOURFOLD_LEDGER_CATALOG");
    fs::remove_all(dir);
}

TEST_CASE("zero-locus pair documents") {
    std::string doc = R"({
        "name": "fano-doc",
        "ambient": {"kind": "grassmannian", "l": 2, "n": 6},
        "construction": {
            "type": "zero_locus",
            "bundle": {"op": "sym", "k": 3, "of": {"op": "taut_dual_sub"}}
        }
    })";
    PairSpec pair = parse_pair_spec(doc);
    CHECK(derive_qform(pair).render() ==
          "45*x1^2 + 36*x1*x2 + 27*x2^2 - 171*x1 - 9*x2");

    // wrong rank is rejected at parse time
    std::string bad = R"({
        "name": "bad",
        "ambient": {"kind": "grassmannian", "l": 2, "n": 6},
        "construction": {
            "type": "zero_locus",
            "bundle": {"op": "taut_dual_sub"}
        }
    })";
    try {
        parse_pair_spec(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "RankMismatch");
    }
}
