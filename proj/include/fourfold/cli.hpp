#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fourfold/lattice.hpp"
#include "fourfold/pair.hpp"
#include "fourfold/pair_json.hpp"
#include "fourfold/report.hpp"
#include "fourfold/surface.hpp"

namespace fourfold {

struct RunResult {
    int exit_code = 0;
    std::string output;
};

namespace cli_detail {

inline std::vector<Int> parse_int_csv(const std::string& csv, const std::string& what) {
    std::vector<Int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        try {
            out.emplace_back(token);
        } catch (const std::invalid_argument&) {
            raise("SchemaError", what + ": '" + token + "' is not an integer");
        }
    }
    if (out.empty()) raise("SchemaError", what + ": empty list");
    return out;
}

inline Int parse_int(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        raise("SchemaError", what + ": '" + text + "' is not an integer");
    }
}

// extra pair specs from the directory named by FOURFOLD_LEDGER_CATALOG
inline std::vector<std::pair<std::string, PairSpec>> environment_catalog() {
    std::vector<std::pair<std::string, PairSpec>> out;
    const char* dir = std::getenv("FOURFOLD_LEDGER_CATALOG");
    if (!dir || !*dir) return out;
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return out;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            out.emplace_back(f.filename().string(), parse_pair_spec(buf.str()));
        } catch (const Error&) {
            // unreadable entries are skipped; they cannot be addressed by name
        }
    }
    return out;
}

inline PairSpec resolve_pair(const std::string& name, const std::string& file,
                             const std::string& degrees_csv) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) raise("SchemaError", "cannot read pair file " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_pair_spec(buf.str());
    }
    if (name.empty()) raise("SchemaError", "no pair named; use --pair or --pair-file");
    if (name == "ci") {
        if (degrees_csv.empty())
            raise("SchemaError", "the parametric pair 'ci' needs --degrees a1,a2,...");
        return make_ci_pair(parse_int_csv(degrees_csv, "--degrees"));
    }
    for (const auto& pair : builtin_catalog())
        if (pair.name == name) return pair;
    for (const auto& [fname, pair] : environment_catalog())
        if (pair.name == name) return pair;
    raise("UnknownPair", "no catalog pair named " + name);
}

inline Report base_report(const std::string& command, const PairSpec& pair) {
    Report r;
    r.command = command;
    r.pair = pair.name;
    r.description = pair.description;
    r.ambient = pair.ambient.str();
    QForm q = derive_qform(pair);
    r.basis = q.basis;
    r.gram = q.gram;
    r.linear = q.linear;
    r.q_rendered = q.render();
    Decency d = decide_decency(q);
    r.decent = d.decent;
    r.decency_minors = d.leading_minors;
    r.decency_failing = d.failing;
    if (d.decent) r.minimum = q_minimum(q);
    return r;
}

inline QForm report_qform(const Report& r) {
    QForm q{r.basis, r.gram, r.linear};
    q.validate();
    return q;
}

inline std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "pair: " << r.pair;
    if (!r.description.empty()) os << "  (" << r.description << ")";
    os << "\nambient: " << r.ambient << "\nbasis:";
    for (const auto& b : r.basis) os << " " << b;
    os << "\ngram:";
    for (const auto& row : r.gram) {
        os << "\n  [";
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].get_str();
        os << "]";
    }
    os << "\nlinear: [";
    for (size_t j = 0; j < r.linear.size(); ++j)
        os << (j ? " " : "") << r.linear[j].get_str();
    os << "]\nQ(x) = " << r.q_rendered << "\ndecent: " << (r.decent ? "yes" : "no");
    os << "  (leading principal minors:";
    for (const auto& m : r.decency_minors) os << " " << m.get_str();
    os << ")";
    if (r.minimum) {
        os << "\nminimum: Q(";
        for (size_t j = 0; j < r.minimum->vertex.size(); ++j)
            os << (j ? ", " : "") << to_string(r.minimum->vertex[j]);
        os << ") = " << to_string(r.minimum->value);
    }
    if (!r.results.empty()) os << "\nresults: " << r.results.dump();
    os << "\n";
    return os.str();
}

inline std::string emit(const Report& r, const std::string& format) {
    if (format == "json") return report_to_json(r).dump(2) + "\n";
    return render_text(r);
}

inline json count_result_json(const CountResult& cr) {
    json out;
    switch (cr.kind) {
        case CountResult::Kind::Empty: out["kind"] = "empty"; break;
        case CountResult::Kind::Finite: out["kind"] = "finite"; break;
        case CountResult::Kind::Infinite: out["kind"] = "infinite"; break;
    }
    if (cr.kind == CountResult::Kind::Infinite) {
        json fams = json::array();
        for (const auto& f : cr.families) {
            json base = json::array(), dir = json::array();
            for (const auto& v : f.base) base.push_back(detail::int_to_json(v));
            for (const auto& v : f.direction) dir.push_back(detail::int_to_json(v));
            fams.push_back({{"base", base}, {"direction", dir}});
        }
        out["families"] = fams;
    } else {
        out["count"] = cr.points.size();
        json pts = json::array();
        for (const auto& p : cr.points) {
            json jp = json::array();
            for (const auto& v : p) jp.push_back(detail::int_to_json(v));
            pts.push_back(jp);
        }
        out["points"] = pts;
    }
    return out;
}

inline json representable_json(const Representable& r) {
    json out;
    out["representable"] = r.representable;
    if (r.representable) {
        json w = json::array();
        for (const auto& v : r.witness) w.push_back(detail::int_to_json(v));
        out["witness"] = w;
    } else if (r.certificate == Representable::Certificate::Modulus) {
        out["certificate"] = "modulus";
        out["modulus"] = detail::int_to_json(r.modulus);
    } else {
        out["certificate"] = "exhausted-enumeration";
    }
    return out;
}

}  // namespace cli_detail

// Executes one CLI invocation; the argument list excludes the program name.
// Exit codes: 0 success, 1 domain error, 2 usage error.
inline RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact invariant calculator for cleanly embedded fourfolds"};
    app.name("fourfold");
    app.require_subcommand(1);

    std::string pair_name, pair_file, degrees_csv, format = "text";
    std::string at_csv, domain_opt, method_opt, lo_text, hi_text;
    std::string max_invariant_text, max_chi_text, chi_text, k2_text;
    bool want_representable = false;

    auto add_pair_options = [&](CLI::App* cmd) {
        cmd->add_option("--pair", pair_name, "catalog pair name (see `fourfold catalog`)");
        cmd->add_option("--pair-file", pair_file, "path to a pair-spec JSON document");
        cmd->add_option("--degrees", degrees_csv,
                        "degrees a1,a2,... for the parametric pair 'ci'");
        cmd->add_option("--format", format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* cat = app.add_subcommand("catalog", "list the built-in pairs");
    cat->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* derive = app.add_subcommand("derive", "derive the quadratic function of a pair");
    add_pair_options(derive);

    CLI::App* eval = app.add_subcommand("eval", "evaluate the quadratic function at a point");
    add_pair_options(eval);
    eval->add_option("--at", at_csv, "integer coordinates x1,x2,...")->required();

    CLI::App* count = app.add_subcommand("count", "count classes under an invariant constraint");
    add_pair_options(count);
    count->add_option("--max-invariant", max_invariant_text, "bound deg(c1^2 - c2) <= s");
    count->add_option("--max-chi", max_chi_text, "bound chi(O_S) <= r (threshold 6r)");
    count->add_option("--chi", chi_text, "fix chi(O_S) = r (with --k2)");
    count->add_option("--k2", k2_text, "fix K_S^2 = q (with --chi; exact value -12r+2q)");
    count->add_option("--domain", domain_opt, "z (all integers) | n3 (nonnegative)")
        ->check(CLI::IsMember({"z", "n3"}));
    count->add_option("--method", method_opt, "bounded-box | hyperbola (non-decent pairs)")
        ->check(CLI::IsMember({"bounded-box", "hyperbola"}));
    count->add_flag("--representable", want_representable,
                    "decide representability of the exact value instead of counting");

    CLI::App* bound = app.add_subcommand("bound", "closed-form count bound (non-certified)");
    add_pair_options(bound);
    bound->add_option("--max-invariant", max_invariant_text, "bound deg(c1^2 - c2) <= s");
    bound->add_option("--max-chi", max_chi_text, "bound chi(O_S) <= r (threshold 6r)");

    CLI::App* rep = app.add_subcommand("representable", "does Q attain a value in [lo, hi]?");
    add_pair_options(rep);
    rep->add_option("--lo", lo_text, "interval lower end")->required();
    rep->add_option("--hi", hi_text, "interval upper end")->required();
    rep->add_option("--domain", domain_opt, "z (all integers) | n3 (nonnegative)")
        ->check(CLI::IsMember({"z", "n3"}));

    std::vector<const char*> argv;
    argv.push_back("fourfold");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        return {code == 0 ? 0 : 2, os.str()};
    }

    auto usage_error = [&](const std::string& message) -> RunResult {
        return {2, "usage error: " + message + "\n"};
    };

    try {
        if (*cat) {
            auto extras = cli_detail::environment_catalog();
            if (format == "json") {
                json out;
                out["tool"] = kToolName;
                out["version"] = kToolVersion;
                out["command"] = "catalog";
                json pairs = json::array();
                auto add = [&](const std::string& name, const std::string& ambient,
                               const std::string& desc) {
                    pairs.push_back({{"name", name}, {"ambient", ambient}, {"description", desc}});
                };
                for (const auto& p : builtin_catalog()) {
                    add(p.name, p.ambient.str(), p.description);
                    if (p.name == "sextic")
                        add("ci", "P^{4+k}",
                            "parametric complete intersection; invoke with --degrees a1,...,ak");
                }
                for (const auto& [fname, p] : extras)
                    add(p.name, p.ambient.str(), p.description + " [" + fname + "]");
                out["pairs"] = pairs;
                return {0, out.dump(2) + "\n"};
            }
            std::ostringstream os;
            for (const auto& p : builtin_catalog()) {
                os << p.name << "  [" << p.ambient.str() << "]  " << p.description << "\n";
                if (p.name == "sextic")
                    os << "ci  [P^{4+k}]  parametric complete intersection; "
                          "invoke with --degrees a1,...,ak\n";
            }
            for (const auto& [fname, p] : extras)
                os << p.name << "  [" << p.ambient.str() << "]  " << p.description << "  ("
                   << fname << ")\n";
            return {0, os.str()};
        }

        PairSpec pair = cli_detail::resolve_pair(pair_name, pair_file, degrees_csv);

        if (*derive) {
            Report r = cli_detail::base_report("derive", pair);
            return {0, cli_detail::emit(r, format)};
        }

        if (*eval) {
            Report r = cli_detail::base_report("eval", pair);
            QForm q = cli_detail::report_qform(r);
            std::vector<Int> at = cli_detail::parse_int_csv(at_csv, "--at");
            Int value = q_eval(q, at);
            json at_json = json::array();
            for (const auto& v : at) at_json.push_back(detail::int_to_json(v));
            r.results = {{"at", at_json}, {"value", detail::int_to_json(value)}};
            return {0, cli_detail::emit(r, format)};
        }

        if (*count || *bound) {
            int modes = (max_invariant_text.empty() ? 0 : 1) + (max_chi_text.empty() ? 0 : 1) +
                        (chi_text.empty() && k2_text.empty() ? 0 : 1);
            if (modes != 1)
                return usage_error(
                    "give exactly one of --max-invariant, --max-chi, or --chi with --k2");
            if (chi_text.empty() != k2_text.empty())
                return usage_error("--chi and --k2 go together");

            bool exact_mode = !chi_text.empty();
            Int threshold;
            std::string mode;
            if (!max_invariant_text.empty()) {
                threshold = cli_detail::parse_int(max_invariant_text, "--max-invariant");
                mode = "max-invariant";
            } else if (!max_chi_text.empty()) {
                Int r = cli_detail::parse_int(max_chi_text, "--max-chi");
                threshold = invariant_threshold(ChiAtMost{r}).second;
                mode = "max-chi";
            } else {
                Int r = cli_detail::parse_int(chi_text, "--chi");
                Int q2 = cli_detail::parse_int(k2_text, "--k2");
                threshold = invariant_threshold(ChiAndK2{r, q2}).second;
                mode = "chi-k2";
            }

            Report report = cli_detail::base_report(*count ? "count" : "bound", pair);
            QForm q = cli_detail::report_qform(report);
            json results;
            results["mode"] = mode;
            results["threshold"] = detail::int_to_json(threshold);

            if (*bound) {
                results["bound"] = closed_form_bound(q, threshold);
                report.results = results;
                return {0, cli_detail::emit(report, format)};
            }

            // products carry the toric effectivity restriction to N^3 by default
            Domain domain = Domain::AllIntegers;
            if (domain_opt.empty())
                domain = pair.ambient.kind() == AmbientModel::Kind::Product
                             ? Domain::Nonnegatives
                             : Domain::AllIntegers;
            else
                domain = domain_opt == "n3" ? Domain::Nonnegatives : Domain::AllIntegers;

            if (want_representable) {
                if (!exact_mode)
                    return usage_error("--representable needs the exact mode --chi with --k2");
                Representable rr = representable(q, threshold, threshold, domain);
                json jr = cli_detail::representable_json(rr);
                for (auto& [k, v] : jr.items()) results[k] = v;
                report.results = results;
                return {0, cli_detail::emit(report, format)};
            }

            results["domain"] = domain == Domain::Nonnegatives ? "n3" : "z";
            if (report.decent) {
                CountResult cr = enumerate_sublevel(q, threshold, domain);
                if (exact_mode && cr.kind == CountResult::Kind::Finite) {
                    std::vector<std::vector<Int>> exact_pts;
                    for (const auto& p : cr.points)
                        if (q_eval(q, p) == threshold) exact_pts.push_back(p);
                    cr = CountResult::finite(std::move(exact_pts));
                }
                json jc = cli_detail::count_result_json(cr);
                for (auto& [k, v] : jc.items()) results[k] = v;
                report.results = results;
                return {0, cli_detail::emit(report, format)};
            }

            // non-decent pairs: only exact values over N^3, by a named method
            if (!exact_mode) {
                // raises NotPositiveDefinite with the module's error name
                enumerate_sublevel(q, threshold, domain);
            }
            if (domain != Domain::Nonnegatives)
                return usage_error("counts on non-decent pairs run over N^3; use --domain n3");
            if (method_opt.empty())
                return usage_error(
                    "counts on non-decent pairs need --method bounded-box | hyperbola");
            N3Method method =
                method_opt == "bounded-box" ? N3Method::BoundedBox : N3Method::HyperbolaFactor;
            results["method"] = method_opt;
            CountResult cr = restricted_count_n3(q, threshold, method);
            json jc = cli_detail::count_result_json(cr);
            for (auto& [k, v] : jc.items()) results[k] = v;
            report.results = results;
            return {0, cli_detail::emit(report, format)};
        }

        if (*rep) {
            Report report = cli_detail::base_report("representable", pair);
            QForm q = cli_detail::report_qform(report);
            Int lo = cli_detail::parse_int(lo_text, "--lo");
            Int hi = cli_detail::parse_int(hi_text, "--hi");
            Domain domain = domain_opt == "n3" ? Domain::Nonnegatives : Domain::AllIntegers;
            Representable rr = representable(q, lo, hi, domain);
            json results;
            results["lo"] = detail::int_to_json(lo);
            results["hi"] = detail::int_to_json(hi);
            results["domain"] = domain == Domain::Nonnegatives ? "n3" : "z";
            json jr = cli_detail::representable_json(rr);
            for (auto& [k, v] : jr.items()) results[k] = v;
            report.results = results;
            return {0, cli_detail::emit(report, format)};
        }
    } catch (const Error& e) {
        if (format == "json") {
            json out;
            out["tool"] = kToolName;
            out["version"] = kToolVersion;
            out["error"] = {{"name", e.name()}, {"message", e.what()}};
            return {1, out.dump(2) + "\n"};
        }
        return {1, std::string("error: ") + e.name() + ": " + e.what() + "\n"};
    }
    return {2, "usage error: no subcommand\n"};
}

}  // namespace fourfold
