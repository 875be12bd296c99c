#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fourfold/bundle.hpp"
#include "fourfold/chow.hpp"
#include "fourfold/error.hpp"
#include "fourfold/qform.hpp"

namespace fourfold {

// Complete intersection of hypersurfaces: one degree vector per hypersurface
// (length 1 on P^n, length 2 on a product).
struct CompleteIntersection {
    std::vector<std::vector<Int>> degrees;
};

// Zero locus of a general section of a bundle on V.
struct ZeroLocus {
    BundleExpr normal;
};

// Intersection-number table keyed by exponent vectors over the ambient's
// degree generators (z | a,b | c1,c2), for pairs whose fourfold intersection
// numbers are imported rather than derived. c2_tangent holds the weight-2
// monomial coefficients of the ambient class restricting to c2(T_X).
// Extra published numbers that Q does not consume are kept verbatim.
struct DegreeOracle {
    std::map<std::vector<int>, Int> table;       // weight-4 monomials -> deg
    std::map<std::vector<int>, Int> c2_tangent;  // weight-2 monomial coefficients
    std::map<std::string, Int> extras;           // e.g. "c1*c3", "c4"
};

// Recorded surface data used for cross-checks only.
struct SurfaceFixture {
    std::string label;
    std::vector<Int> alpha;  // class in the codim-2 basis
    Int c1_sq = 0;
    Int c2 = 0;
    std::optional<std::array<Int, 3>> hodge;  // h0, h1, h2 of O_S
};

struct PairSpec {
    std::string name;
    AmbientModel ambient;
    std::variant<CompleteIntersection, ZeroLocus, DegreeOracle> construction;
    std::vector<SurfaceFixture> fixtures;
    std::string description;
};

namespace detail {

// generator names and weights backing a degree oracle for each ambient kind
struct OracleGenerators {
    std::vector<std::string> names;
    std::vector<int> weights;
};

inline OracleGenerators oracle_generators(const AmbientModel& V) {
    switch (V.kind()) {
        case AmbientModel::Kind::Projective: return {{"z"}, {1}};
        case AmbientModel::Kind::Product: return {{"a", "b"}, {1, 1}};
        case AmbientModel::Kind::Grassmannian: return {{"c1", "c2"}, {1, 2}};
    }
    return {};
}

// the basis classes of N^2(V) written as polynomials in the oracle generators
inline std::vector<Poly> codim2_basis_in_generators(const AmbientModel& V) {
    switch (V.kind()) {
        case AmbientModel::Kind::Projective: return {Poly::variable("z", 2)};
        case AmbientModel::Kind::Product:
            return {Poly::variable("a", 2), Poly::variable("a") * Poly::variable("b"),
                    Poly::variable("b", 2)};
        case AmbientModel::Kind::Grassmannian: {
            std::vector<Poly> out;
            if (V.gr_n() - V.gr_l() >= 2) out.push_back(giambelli(Partition{2}, V.gr_l()));
            if (V.gr_l() >= 2) out.push_back(giambelli(Partition{1, 1}, V.gr_l()));
            return out;
        }
    }
    return {};
}

inline Int oracle_lookup(const DegreeOracle& oracle, const AmbientModel& V, const Poly& p) {
    auto gens = oracle_generators(V);
    Int acc = 0;
    const auto& vars = p.variables();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> key(gens.names.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = std::find(gens.names.begin(), gens.names.end(), vars[i]);
            if (it == gens.names.end())
                raise("OracleIncomplete", "monomial involves non-generator " + vars[i]);
            key[it - gens.names.begin()] = e[i];
        }
        auto found = oracle.table.find(key);
        if (found == oracle.table.end()) {
            std::string mono;
            for (size_t g = 0; g < key.size(); ++g) {
                if (key[g] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += gens.names[g];
                if (key[g] > 1) mono += "^" + std::to_string(key[g]);
            }
            raise("OracleIncomplete", "missing oracle degree for " + mono);
        }
        acc += c * found->second;
    }
    return acc;
}

inline BundleExpr ci_normal_bundle(const AmbientModel& V, const CompleteIntersection& ci) {
    size_t slots = V.kind() == AmbientModel::Kind::Projective ? 1 : 2;
    if (V.kind() == AmbientModel::Kind::Grassmannian)
        raise("InvalidAtom", "complete intersections are supported on P^n and products");
    std::vector<BundleExpr> lines;
    for (const auto& d : ci.degrees) {
        if (d.size() != slots)
            raise("SchemaError", "degree vector length must be " + std::to_string(slots));
        lines.push_back(BundleExpr::line_bundle(d));
    }
    return BundleExpr::direct_sum(std::move(lines));
}

// total-degree Calabi-Yau check for complete intersections; equivalent to
// the c1 certificate but reports the arithmetic directly
inline void check_ci_calabi_yau(const AmbientModel& V, const CompleteIntersection& ci) {
    std::vector<Int> total(V.kind() == AmbientModel::Kind::Projective ? 1 : 2, 0);
    for (const auto& d : ci.degrees)
        for (size_t i = 0; i < d.size() && i < total.size(); ++i) total[i] += d[i];
    std::vector<Int> want;
    if (V.kind() == AmbientModel::Kind::Projective)
        want = {Int(V.n() + 1)};
    else
        want = {Int(V.a() + 1), Int(V.b() + 1)};
    if (total != want) {
        std::string have, need;
        for (const auto& t : total) have += (have.empty() ? "" : ",") + t.get_str();
        for (const auto& w : want) need += (need.empty() ? "" : ",") + w.get_str();
        raise("NotCalabiYau", "total degrees (" + have + ") must equal (" + need + ")");
    }
}

}  // namespace detail

// The normal bundle expression backing a CI or zero-locus construction.
inline BundleExpr normal_bundle_of(const PairSpec& pair) {
    if (const auto* ci = std::get_if<CompleteIntersection>(&pair.construction)) {
        detail::check_ci_calabi_yau(pair.ambient, *ci);
        return detail::ci_normal_bundle(pair.ambient, *ci);
    }
    if (const auto* zl = std::get_if<ZeroLocus>(&pair.construction)) return zl->normal;
    raise("InvalidConstruction", "degree-oracle pairs have no bundle-backed normal");
}

inline QForm derive_qform(const PairSpec& pair) {
    const AmbientModel& V = pair.ambient;
    QForm q;
    q.basis = codim2_basis_labels(V);
    const int m = static_cast<int>(q.basis.size());
    q.gram.assign(m, std::vector<Int>(m, 0));
    q.linear.assign(m, 0);

    if (const auto* oracle = std::get_if<DegreeOracle>(&pair.construction)) {
        auto basis = detail::codim2_basis_in_generators(V);
        Poly c2tx;
        auto gens = detail::oracle_generators(V);
        for (const auto& [key, coeff] : oracle->c2_tangent) {
            Poly mono = Poly::constant(coeff);
            for (size_t g = 0; g < key.size(); ++g)
                if (key[g] != 0) mono = mono * Poly::variable(gens.names[g], key[g]);
            c2tx = c2tx + mono;
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                Int v = detail::oracle_lookup(*oracle, V, basis[i] * basis[j]);
                q.gram[i][j] = v;
                q.gram[j][i] = v;
            }
            q.linear[i] = detail::oracle_lookup(*oracle, V, basis[i] * c2tx);
        }
        q.validate();
        return q;
    }

    BundleExpr normal = normal_bundle_of(pair);
    RingClass x = fundamental_class(V, normal);
    RingClass c2tx = zero_locus_c2(V, normal);
    auto basis = codim2_basis(V);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Int v = degree(ring_mul(ring_mul(x, basis[i]), basis[j]));
            q.gram[i][j] = v;
            q.gram[j][i] = v;
        }
        q.linear[i] = degree(ring_mul(ring_mul(x, basis[i]), c2tx));
    }
    q.validate();
    return q;
}

inline Decency is_decent(const PairSpec& pair) { return decide_decency(derive_qform(pair)); }

// Closed form for complete intersections in P^{4+k} with degrees (a_1..a_k):
//   Q(x) = (prod a_i) x^2 - (prod a_i)(binom(5+k,2) - sum_{i<j} a_i a_j) x
inline QForm ci_qform(int k, const std::vector<Int>& degrees) {
    if (static_cast<int>(degrees.size()) != k)
        raise("DimensionMismatch", "expected k degrees");
    Int total = 0;
    for (const auto& d : degrees) total += d;
    if (total != 5 + k)
        raise("NotCalabiYau", "degrees must sum to " + std::to_string(5 + k));
    Int prod = 1;
    for (const auto& d : degrees) prod *= d;
    Int cross = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cross += degrees[i] * degrees[j];
    QForm q;
    q.basis = {"z^2"};
    q.gram = {{prod}};
    q.linear = {prod * (binomial(5 + k, 2) - cross)};
    q.validate();
    return q;
}

// ---------------------------------------------------------------------------
// built-in catalog
// ---------------------------------------------------------------------------

inline PairSpec make_ci_pair(const std::vector<Int>& degrees, std::string name = "") {
    int k = static_cast<int>(degrees.size());
    if (k < 1) raise("SchemaError", "need at least one degree");
    if (name.empty()) {
        name = "ci(";
        for (int i = 0; i < k; ++i) name += (i ? "," : "") + degrees[i].get_str();
        name += ")";
    }
    CompleteIntersection ci;
    for (const auto& d : degrees) ci.degrees.push_back({d});
    PairSpec pair{std::move(name), AmbientModel::projective(4 + k), std::move(ci), {},
                  "complete intersection Calabi-Yau fourfold in P^" + std::to_string(4 + k)};
    detail::check_ci_calabi_yau(pair.ambient, std::get<CompleteIntersection>(pair.construction));
    return pair;
}

inline const std::vector<PairSpec>& builtin_catalog() {
    static const std::vector<PairSpec> catalog = [] {
        std::vector<PairSpec> out;

        out.push_back(make_ci_pair({Int(6)}, "sextic"));
        out.back().description = "smooth sextic fourfold in P^5";

        {
            PairSpec fano{"fano", AmbientModel::grassmannian(2, 6),
                          ZeroLocus{BundleExpr::sym(3, BundleExpr::taut_dual_sub())},
                          {SurfaceFixture{"surface of lines through a hyperplane section",
                                          {Int(0), Int(1)}, Int(45), Int(27), std::nullopt}},
                          "Fano variety of lines in a general cubic fourfold, in G(2,6)"};
            out.push_back(std::move(fano));
        }

        {
            DegreeOracle oracle;
            oracle.table[{4, 0}] = 1452;  // c1^4
            oracle.table[{2, 1}] = 825;   // c1^2 c2
            oracle.table[{0, 2}] = 477;   // c2^2
            oracle.extras["c1*c3"] = 330;
            oracle.extras["c4"] = 105;
            // the class restricting to c2(T_X) is derived from the defining
            // bundle wedge^3 E_6, matching the zero-locus route
            Poly c2tx = zero_locus_c2_poly(AmbientModel::grassmannian(6, 10),
                                           BundleExpr::wedge(3, BundleExpr::taut_dual_sub()));
            oracle.c2_tangent[{2, 0}] = c2tx.coefficient({{"c1", 2}});
            oracle.c2_tangent[{0, 1}] = c2tx.coefficient({{"c2", 1}});
            PairSpec dv{"dv", AmbientModel::grassmannian(6, 10), std::move(oracle),
                        {SurfaceFixture{"surface of 6-spaces meeting a fixed 3-space",
                                        {Int(1), Int(0)}, Int(900), Int(972),
                                        std::array<Int, 3>{Int(1), Int(0), Int(155)}}},
                        "Debarre-Voisin hyper-Kahler fourfold, zero locus of a 3-form in G(6,10)"};
            out.push_back(std::move(dv));
        }

        auto product_ci = [](std::string name, int a, int b,
                             std::vector<std::vector<int>> degs, std::string desc) {
            CompleteIntersection ci;
            for (const auto& d : degs) ci.degrees.push_back({Int(d[0]), Int(d[1])});
            return PairSpec{std::move(name), AmbientModel::product(a, b), std::move(ci), {},
                            std::move(desc)};
        };

        out.push_back(product_ci("cicy41", 2, 4, {{0, 5}, {3, 0}},
                                 "product of an elliptic curve and a quintic threefold, "
                                 "bidegrees (0,5),(3,0) in P^2 x P^4"));
        out.push_back(product_ci("cicy130", 4, 6,
                                 {{0, 2}, {0, 2}, {1, 1}, {1, 1}, {1, 1}, {2, 0}},
                                 "Calabi-Yau complete intersection of bidegrees "
                                 "(0,2)x2,(1,1)x3,(2,0) in P^4 x P^6"));
        out.push_back(product_ci("cicy133", 5, 5,
                                 {{0, 2}, {0, 2}, {1, 1}, {1, 1}, {2, 0}, {2, 0}},
                                 "Calabi-Yau complete intersection of bidegrees "
                                 "(0,2)x2,(1,1)x2,(2,0)x2 in P^5 x P^5"));
        return out;
    }();
    return catalog;
}

inline const PairSpec& catalog_pair(const std::string& name) {
    for (const auto& pair : builtin_catalog())
        if (pair.name == name) return pair;
    raise("UnknownPair", "no catalog pair named " + name);
}

}  // namespace fourfold
