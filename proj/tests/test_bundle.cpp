#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fourfold/bundle.hpp"

using namespace fourfold;

namespace {

Poly cvar(int k, int exp = 1) { return Poly::variable("c" + std::to_string(k), exp); }

std::vector<std::string> root_strings(const FormalBundle& fb) {
    std::vector<std::string> s;
    for (const auto& r : fb.roots) s.push_back(r.str());
    std::sort(s.begin(), s.end());
    return s;
}

Poly total_chern(const FormalBundle& fb) {
    Poly c = Poly::constant(1);
    for (int k = 1; k <= fb.rank(); ++k) c = c + chern_class(fb, k);
    return c;
}

}  // namespace

TEST_CASE("dual negates roots") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle d = realize(BundleExpr::dual(BundleExpr::taut_dual_sub()), G);
    CHECK(root_strings(d) == std::vector<std::string>{"-x1", "-x2"});
}

TEST_CASE("tensor of sub and dual sub") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle t =
        realize(BundleExpr::tensor(BundleExpr::taut_sub(), BundleExpr::taut_dual_sub()), G);
    CHECK(root_strings(t) == std::vector<std::string>{"-x1 + x2", "0", "0", "x1 - x2"});
}

TEST_CASE("symmetric cube roots") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle s = realize(BundleExpr::sym(3, BundleExpr::taut_dual_sub()), G);
    CHECK(root_strings(s) ==
          std::vector<std::string>{"2*x1 + x2", "3*x1", "3*x2", "x1 + 2*x2"});
}

TEST_CASE("wedge cube of the rank-6 bundle") {
    auto G = AmbientModel::grassmannian(6, 10);
    FormalBundle w = realize(BundleExpr::wedge(3, BundleExpr::taut_dual_sub()), G);
    CHECK(w.rank() == 20);
    // every root is a 3-subset sum x_i + x_j + x_k
    auto strs = root_strings(w);
    CHECK(std::count(strs.begin(), strs.end(), "x1 + x2 + x3") == 1);
    CHECK(std::count(strs.begin(), strs.end(), "x4 + x5 + x6") == 1);
}

TEST_CASE("chern classes of the symmetric cube") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle s = realize(BundleExpr::sym(3, BundleExpr::taut_dual_sub()), G);
    CHECK(chern_class(s, 2) == Int(11) * cvar(1, 2) + Int(10) * cvar(2));
    CHECK(chern_class(s, 4) == Int(18) * cvar(1, 2) * cvar(2) + Int(9) * cvar(2, 2));
}

TEST_CASE("chern class of the wedge cube") {
    auto G = AmbientModel::grassmannian(6, 10);
    FormalBundle w = realize(BundleExpr::wedge(3, BundleExpr::taut_dual_sub()), G);
    CHECK(chern_class(w, 2) == Int(45) * cvar(1, 2) + Int(6) * cvar(2));
}

TEST_CASE("chern class of sub tensor dual-sub") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle t =
        realize(BundleExpr::tensor(BundleExpr::taut_sub(), BundleExpr::taut_dual_sub()), G);
    CHECK(chern_class(t, 1) == Poly());
    CHECK(chern_class(t, 2) == Int(-1) * cvar(1, 2) + Int(4) * cvar(2));
}

TEST_CASE("ambient tangent c2") {
    auto P5 = AmbientModel::projective(5);
    CHECK(ambient_tangent_c2(P5) == RingClass(P5, 2, Int(15) * Poly::variable("z", 2)));

    auto G26 = AmbientModel::grassmannian(2, 6);
    CHECK(ambient_tangent_c2_poly(G26) == Int(16) * cvar(1, 2) + Int(2) * cvar(2));
    SchubertExpr expect(2, 6);
    expect.add(Partition{2}, 16);
    expect.add(Partition{1, 1}, 18);
    CHECK(ambient_tangent_c2(G26) == RingClass(G26, 2, expect));

    auto G610 = AmbientModel::grassmannian(6, 10);
    CHECK(ambient_tangent_c2_poly(G610) == Int(50) * cvar(1, 2) - Int(2) * cvar(2));

    auto V24 = AmbientModel::product(2, 4);
    Poly a = Poly::variable("a"), b = Poly::variable("b");
    CHECK(ambient_tangent_c2_poly(V24) ==
          Int(3) * a * a + Int(15) * a * b + Int(10) * b * b);
}

TEST_CASE("zero locus c2 of the catalog constructions") {
    auto P5 = AmbientModel::projective(5);
    RingClass sextic = zero_locus_c2(P5, BundleExpr::line_bundle({Int(6)}));
    CHECK(sextic == RingClass(P5, 2, Int(15) * Poly::variable("z", 2)));

    Poly expect = Int(5) * cvar(1, 2) - Int(8) * cvar(2);
    auto G26 = AmbientModel::grassmannian(2, 6);
    CHECK(zero_locus_c2_poly(G26, BundleExpr::sym(3, BundleExpr::taut_dual_sub())) == expect);
    auto G610 = AmbientModel::grassmannian(6, 10);
    CHECK(zero_locus_c2_poly(G610, BundleExpr::wedge(3, BundleExpr::taut_dual_sub())) == expect);
}

TEST_CASE("the vanishing-c1 certificate is enforced") {
    auto P6 = AmbientModel::projective(6);
    auto bad = BundleExpr::direct_sum(
        {BundleExpr::line_bundle({Int(2)}), BundleExpr::line_bundle({Int(2)})});
    CHECK_THROWS_AS(zero_locus_c2(P6, bad), Error);
    try {
        zero_locus_c2(P6, bad);
    } catch (const Error& e) {
        CHECK(e.name() == "NotCalabiYau");
    }
}

TEST_CASE("fundamental classes") {
    auto P5 = AmbientModel::projective(5);
    CHECK(fundamental_class(P5, BundleExpr::line_bundle({Int(6)})) ==
          RingClass(P5, 1, Int(6) * Poly::variable("z")));

    auto G26 = AmbientModel::grassmannian(2, 6);
    SchubertExpr f(2, 6);
    f.add(Partition{3, 1}, 18);
    f.add(Partition{2, 2}, 27);
    CHECK(fundamental_class(G26, BundleExpr::sym(3, BundleExpr::taut_dual_sub())) ==
          RingClass(G26, 4, f));

    auto V24 = AmbientModel::product(2, 4);
    auto normal = BundleExpr::direct_sum({BundleExpr::line_bundle({Int(0), Int(5)}),
                                          BundleExpr::line_bundle({Int(3), Int(0)})});
    CHECK(fundamental_class(V24, normal) ==
          RingClass(V24, 2, Int(15) * Poly::variable("a") * Poly::variable("b")));
}

TEST_CASE("rank mismatch is rejected") {
    auto P5 = AmbientModel::projective(5);
    auto two = BundleExpr::direct_sum(
        {BundleExpr::line_bundle({Int(3)}), BundleExpr::line_bundle({Int(3)})});
    CHECK_THROWS_AS(fundamental_class(P5, two), Error);
    try {
        fundamental_class(P5, two);
    } catch (const Error& e) {
        CHECK(e.name() == "RankMismatch");
    }
}

TEST_CASE("whitney sum on random line-bundle sums") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> deg(-3, 3);
    std::uniform_int_distribution<int> cnt(1, 3);
    auto P9 = AmbientModel::projective(9);
    for (int rep = 0; rep < 12; ++rep) {
        auto rand_sum = [&] {
            std::vector<BundleExpr> parts;
            int c = cnt(rng);
            for (int i = 0; i < c; ++i) parts.push_back(BundleExpr::line_bundle({Int(deg(rng))}));
            return BundleExpr::direct_sum(std::move(parts));
        };
        BundleExpr e = rand_sum(), f = rand_sum();
        FormalBundle fe = realize(e, P9), ff = realize(f, P9);
        FormalBundle sum = realize(BundleExpr::direct_sum({e, f}), P9);
        CHECK(total_chern(sum) == total_chern(fe) * total_chern(ff));
    }
}

TEST_CASE("whitney sum on grassmannian constructions") {
    auto G = AmbientModel::grassmannian(2, 6);
    BundleExpr e = BundleExpr::sym(2, BundleExpr::taut_dual_sub());
    BundleExpr f = BundleExpr::taut_sub();
    FormalBundle sum = realize(BundleExpr::direct_sum({e, f}), G);
    CHECK(total_chern(sum) == total_chern(realize(e, G)) * total_chern(realize(f, G)));
}

TEST_CASE("dual sign rule") {
    auto G = AmbientModel::grassmannian(2, 6);
    BundleExpr e = BundleExpr::sym(2, BundleExpr::taut_dual_sub());
    FormalBundle fe = realize(e, G);
    FormalBundle fd = realize(BundleExpr::dual(e), G);
    for (int k = 0; k <= fe.rank(); ++k) {
        Poly sign = Poly::constant(k % 2 == 0 ? 1 : -1);
        CHECK(chern_class(fd, k) == sign * chern_class(fe, k));
    }
}

TEST_CASE("chern classes vanish beyond the rank and c0 is one") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle fe = realize(BundleExpr::taut_dual_sub(), G);
    CHECK(chern_class(fe, 0) == Poly::constant(1));
    CHECK(chern_class(fe, 3) == Poly());
    CHECK(chern_class(fe, -1) == Poly());
}

TEST_CASE("chern classes are root-order independent") {
    auto G = AmbientModel::grassmannian(2, 6);
    FormalBundle s = realize(BundleExpr::sym(3, BundleExpr::taut_dual_sub()), G);
    FormalBundle shuffled = s;
    std::mt19937 rng(4);
    for (int rep = 0; rep < 5; ++rep) {
        std::shuffle(shuffled.roots.begin(), shuffled.roots.end(), rng);
        for (int k = 0; k <= s.rank(); ++k) CHECK(chern_class(shuffled, k) == chern_class(s, k));
    }
}

TEST_CASE("tensoring with the trivial line bundle changes nothing") {
    auto V = AmbientModel::product(2, 4);
    BundleExpr e = BundleExpr::direct_sum({BundleExpr::line_bundle({Int(0), Int(5)}),
                                           BundleExpr::line_bundle({Int(3), Int(0)})});
    BundleExpr t = BundleExpr::tensor(e, BundleExpr::line_bundle({Int(0), Int(0)}));
    FormalBundle fe = realize(e, V), ft = realize(t, V);
    for (int k = 0; k <= fe.rank(); ++k) CHECK(chern_class(ft, k) == chern_class(fe, k));
}

TEST_CASE("complete-intersection c2 closed form") {
    // on P^{4+k} with degrees a_i summing to 5+k the restricting class is
    // (binom(5+k,2) - sum_{i<j} a_i a_j) z^2
    std::mt19937 rng(2025);
    for (int k = 1; k <= 3; ++k) {
        for (int rep = 0; rep < 8; ++rep) {
            // random positive degrees with the right total
            std::vector<Int> degs(k, 1);
            int remaining = 5 + k - k;
            for (int i = 0; i + 1 < k && remaining > 0; ++i) {
                std::uniform_int_distribution<int> extra(0, remaining);
                int add = extra(rng);
                degs[i] += add;
                remaining -= add;
            }
            degs[k - 1] += remaining;
            std::vector<BundleExpr> lines;
            for (const auto& d : degs) lines.push_back(BundleExpr::line_bundle({d}));
            auto V = AmbientModel::projective(4 + k);
            Poly got = zero_locus_c2_poly(V, BundleExpr::direct_sum(std::move(lines)));
            Int cross = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) cross += degs[i] * degs[j];
            Int coeff = binomial(5 + k, 2) - cross;
            CHECK(got == coeff * Poly::variable("z", 2));
        }
    }
}

TEST_CASE("quotient bundle chern classes") {
    auto G = AmbientModel::grassmannian(6, 10);
    FormalBundle q = realize(BundleExpr::taut_quot(), G);
    CHECK(q.rank() == 4);
    CHECK(chern_class(q, 2) == Poly::variable("q2"));
    // c2(Q) is the codimension-2 row class (1,0)
    CHECK(chern_to_schubert(chern_class(q, 2), 6, 10) ==
          SchubertExpr::single(6, 10, Partition{2}));
}

TEST_CASE("invalid atoms for the ambient kind") {
    auto P5 = AmbientModel::projective(5);
    CHECK_THROWS_AS(realize(BundleExpr::taut_sub(), P5), Error);
    auto G = AmbientModel::grassmannian(2, 6);
    CHECK_THROWS_AS(realize(BundleExpr::line_bundle({Int(1)}), G), Error);
    try {
        realize(BundleExpr::taut_sub(), P5);
    } catch (const Error& e) {
        CHECK(e.name() == "InvalidAtom");
    }
}
