#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourfold/poly.hpp"

using namespace fourfold;

namespace {

Poly var(const std::string& n) { return Poly::variable(n); }

std::vector<std::string> xs(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg,
                 int max_terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Poly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Poly term = Poly::constant(coeff(rng));
        int budget = deg(rng);
        for (const auto& v : vars) {
            if (budget <= 0) break;
            std::uniform_int_distribution<int> e(0, budget);
            int k = e(rng);
            if (k > 0) term = term * Poly::variable(v, k);
            budget -= k;
        }
        p = p + term;
    }
    return p;
}

}  // namespace

TEST_CASE("product of conjugate binomials") {
    Poly a = var("x1") + var("x2");
    Poly b = var("x1") - var("x2");
    CHECK(a * b == var("x1") * var("x1") - var("x2") * var("x2"));
}

TEST_CASE("multiplication by one is the identity") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 20; ++i) {
        Poly p = random_poly(rng, xs(3), 4, 6);
        CHECK(p * Poly::constant(1) == p);
        CHECK(Poly::constant(1) * p == p);
    }
}

TEST_CASE("binomial square") {
    Poly s = var("x1") + var("x2");
    Poly expect = Poly::make({"x1", "x2"}, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    CHECK(s * s == expect);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        Poly a = random_poly(rng, xs(3), 3, 4);
        Poly b = random_poly(rng, xs(3), 3, 4);
        Poly c = random_poly(rng, xs(3), 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("canonical form is independent of construction order") {
    Poly p1 = var("x1") + var("x2") * var("x2") + Poly::constant(3);
    Poly p2 = Poly::constant(3) + var("x2") * var("x2") + var("x1");
    CHECK(p1 == p2);
    CHECK(p1.variables() == p2.variables());
    CHECK(p1.terms() == p2.terms());
    CHECK(p1.str() == p2.str());

    // unused variables are pruned so cancellation restores the small form
    Poly q = (var("x1") + var("x3")) - var("x3");
    CHECK(q == var("x1"));
    CHECK(q.variables() == std::vector<std::string>{"x1"});
}

TEST_CASE("graded-lex leading term") {
    Poly p = var("x1") + var("x2").pow(3);
    CHECK(p.terms().begin()->first == Exponents{0, 3});
    CHECK(p.total_degree() == 3);
}

TEST_CASE("power sums in the elementary basis") {
    Poly p = var("x1") * var("x1") + var("x2") * var("x2");
    Poly r = symmetric_reduce(p, {"x1", "x2"});
    Poly expect = Poly::make({"e1", "e2"}, {{{2, 0}, 1}, {{0, 1}, -2}});
    CHECK(r == expect);
}

TEST_CASE("discriminant-like square in the elementary basis") {
    Poly d = var("x1") - var("x2");
    Poly r = symmetric_reduce(d * d, {"x1", "x2"});
    Poly expect = Poly::make({"e1", "e2"}, {{{2, 0}, 1}, {{0, 1}, -4}});
    CHECK(r == expect);
}

TEST_CASE("e2 of the symmetric-cube root system") {
    // roots 3*x1, 2*x1+x2, x1+2*x2, 3*x2
    Poly x1 = var("x1"), x2 = var("x2");
    std::vector<Poly> roots = {Int(3) * x1, Int(2) * x1 + x2, x1 + Int(2) * x2, Int(3) * x2};
    Poly e2;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) e2 = e2 + roots[i] * roots[j];
    Poly r = symmetric_reduce(e2, {"x1", "x2"});
    Poly expect = Poly::make({"e1", "e2"}, {{{2, 0}, 11}, {{0, 1}, 10}});
    CHECK(r == expect);
}

TEST_CASE("symmetric_reduce rejects asymmetric input") {
    Poly p = var("x1") * var("x1") + var("x2");
    CHECK_THROWS_WITH_AS(symmetric_reduce(p, {"x1", "x2"}), doctest::Contains("not symmetric"),
                         Error);
    try {
        symmetric_reduce(p, {"x1", "x2"});
    } catch (const Error& e) {
        CHECK(e.name() == "NotSymmetric");
    }
}

TEST_CASE("round trip through the elementary basis") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 6; ++n) {
        auto vars = xs(n);
        std::vector<std::string> es;
        std::map<std::string, Poly> back;
        for (int k = 1; k <= n; ++k) {
            es.push_back("e" + std::to_string(k));
            back["e" + std::to_string(k)] = elementary_symmetric(vars, k);
        }
        for (int rep = 0; rep < 4; ++rep) {
            // build a symmetric polynomial from a random e-polynomial
            Poly in_e = random_poly(rng, es, 3, 4);
            Poly sym = substitute(in_e, back);
            REQUIRE(sym.total_degree() <= 6 * 3);
            Poly reduced = symmetric_reduce(sym, vars);
            // uniqueness: the reduction recovers the defining e-polynomial
            CHECK(reduced == in_e);
            // and substituting forward reproduces the symmetric polynomial
            CHECK(substitute(reduced, back) == sym);
        }
    }
}

TEST_CASE("reduction carries spectator variables through") {
    Poly p = (var("x1") + var("x2")) * var("t");
    Poly r = symmetric_reduce(p, {"x1", "x2"});
    CHECK(r == var("e1") * var("t"));
}
