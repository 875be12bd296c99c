#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourfold/chow.hpp"

using namespace fourfold;

namespace {

RingClass zeta_power(const AmbientModel& V, int k, Int c = 1) {
    return RingClass(V, k, c * Poly::variable("z", k));
}

RingClass ab_class(const AmbientModel& V, int i, int j, Int c = 1) {
    Poly p = Poly::constant(std::move(c));
    if (i) p = p * Poly::variable("a", i);
    if (j) p = p * Poly::variable("b", j);
    int g = i + j;
    return RingClass(V, g, p);
}

}  // namespace

TEST_CASE("truncation in projective space") {
    auto P5 = AmbientModel::projective(5);
    RingClass z3 = zeta_power(P5, 3);
    CHECK(ring_mul(z3, z3).is_zero());
    CHECK(!ring_mul(zeta_power(P5, 2), z3).is_zero());
}

TEST_CASE("truncation in a product") {
    auto V = AmbientModel::product(4, 6);
    RingClass a3 = ab_class(V, 3, 0);
    RingClass a2 = ab_class(V, 2, 0);
    CHECK(ring_mul(a3, a2).is_zero());
    CHECK(!ring_mul(a3, ab_class(V, 1, 4)).is_zero());
}

TEST_CASE("grassmannian multiplication delegates to the LR rule") {
    auto G = AmbientModel::grassmannian(2, 6);
    RingClass s2(G, 2, SchubertExpr::single(2, 6, Partition{2}));
    RingClass s11(G, 2, SchubertExpr::single(2, 6, Partition{1, 1}));
    RingClass got = ring_mul(s2, s11);
    CHECK(got == RingClass(G, 4, SchubertExpr::single(2, 6, Partition{3, 1})));
}

TEST_CASE("degree of point classes") {
    auto P5 = AmbientModel::projective(5);
    CHECK(degree(zeta_power(P5, 5)) == 1);

    // leading coefficient of a sextic hypersurface class against two basis squares
    RingClass x = zeta_power(P5, 1, 6);
    RingClass q = ring_mul(ring_mul(x, zeta_power(P5, 2)), zeta_power(P5, 2));
    CHECK(degree(q) == 6);

    auto V = AmbientModel::product(4, 6);
    CHECK(degree(ab_class(V, 4, 6)) == 1);
    CHECK(degree(ab_class(V, 4, 6, 7)) == 7);

    auto G = AmbientModel::grassmannian(2, 6);
    CHECK(degree(RingClass(G, 8, SchubertExpr::single(2, 6, Partition{4, 4}))) == 1);
}

TEST_CASE("degree rejects classes below top grade") {
    auto P5 = AmbientModel::projective(5);
    CHECK_THROWS_AS(degree(zeta_power(P5, 3)), Error);
    try {
        degree(zeta_power(P5, 3));
    } catch (const Error& e) {
        CHECK(e.name() == "NotTopGrade");
    }
}

TEST_CASE("ambient mismatch is rejected") {
    auto P5 = AmbientModel::projective(5);
    auto P6 = AmbientModel::projective(6);
    CHECK_THROWS_AS(ring_mul(zeta_power(P5, 1), zeta_power(P6, 1)), Error);
    try {
        ring_mul(zeta_power(P5, 1), zeta_power(P6, 1));
    } catch (const Error& e) {
        CHECK(e.name() == "AmbientMismatch");
    }
}

TEST_CASE("codim-2 bases match the three families") {
    auto P5 = AmbientModel::projective(5);
    auto basis_p = codim2_basis(P5);
    REQUIRE(basis_p.size() == 1);
    CHECK(basis_p[0] == zeta_power(P5, 2));
    CHECK(codim2_basis_labels(P5) == std::vector<std::string>{"z^2"});

    auto G = AmbientModel::grassmannian(2, 6);
    auto basis_g = codim2_basis(G);
    REQUIRE(basis_g.size() == 2);
    CHECK(basis_g[0] == RingClass(G, 2, SchubertExpr::single(2, 6, Partition{2})));
    CHECK(basis_g[1] == RingClass(G, 2, SchubertExpr::single(2, 6, Partition{1, 1})));

    auto V = AmbientModel::product(4, 6);
    auto basis_v = codim2_basis(V);
    REQUIRE(basis_v.size() == 3);
    CHECK(basis_v[0] == ab_class(V, 2, 0));
    CHECK(basis_v[1] == ab_class(V, 1, 1));
    CHECK(basis_v[2] == ab_class(V, 0, 2));
    CHECK(codim2_basis_labels(V) == std::vector<std::string>{"a^2", "a*b", "b^2"});
}

TEST_CASE("graded ring axioms on random classes") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> coeff(-9, 9);

    auto V = AmbientModel::product(4, 6);
    auto rand_class = [&](int grade) {
        RingClass acc = RingClass::zero(V, grade);
        for (int i = 0; i <= grade; ++i)
            acc = acc + ab_class(V, i, grade - i, coeff(rng));
        return acc;
    };
    for (int rep = 0; rep < 15; ++rep) {
        RingClass x = rand_class(2), y = rand_class(2), z = rand_class(3);
        CHECK(ring_mul(x, y) == ring_mul(y, x));
        CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
        CHECK(ring_mul(x + y, z) == ring_mul(x, z) + ring_mul(y, z));
        CHECK(ring_mul(RingClass::unit(V), x) == x);
    }
}

TEST_CASE("classes beyond the dimension vanish") {
    auto V = AmbientModel::product(2, 4);
    RingClass top = ab_class(V, 2, 4);
    CHECK(ring_mul(top, ab_class(V, 1, 0)).is_zero());
    auto G = AmbientModel::grassmannian(2, 6);
    RingClass point(G, 8, SchubertExpr::single(2, 6, Partition{4, 4}));
    RingClass s1(G, 1, SchubertExpr::single(2, 6, Partition{1}));
    CHECK(ring_mul(point, s1).is_zero());
}

TEST_CASE("degree is additive on top-grade classes") {
    auto V = AmbientModel::product(4, 6);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int rep = 0; rep < 10; ++rep) {
        RingClass x = ab_class(V, 4, 6, coeff(rng));
        RingClass y = ab_class(V, 4, 6, coeff(rng));
        CHECK(degree(x + y) == degree(x) + degree(y));
        CHECK(degree(Int(3) * x) == 3 * degree(x));
    }
}
