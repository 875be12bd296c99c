#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"
#include "fourfold/qform.hpp"

namespace fourfold {

enum class Domain { AllIntegers, Nonnegatives };

// one-parameter family {base + t*direction : t in N}
struct Family {
    std::vector<Int> base;
    std::vector<Int> direction;

    friend bool operator==(const Family& a, const Family& b) {
        return a.base == b.base && a.direction == b.direction;
    }
    friend bool operator<(const Family& a, const Family& b) {
        return std::tie(a.base, a.direction) < std::tie(b.base, b.direction);
    }
};

struct CountResult {
    enum class Kind { Empty, Finite, Infinite };
    Kind kind = Kind::Empty;
    std::vector<std::vector<Int>> points;  // Finite: lexicographically sorted
    std::vector<Family> families;          // Infinite: nonempty certificate

    static CountResult empty() { return CountResult{}; }
    static CountResult finite(std::vector<std::vector<Int>> pts) {
        std::sort(pts.begin(), pts.end());
        return CountResult{Kind::Finite, std::move(pts), {}};
    }
    static CountResult infinite(std::vector<Family> fams) {
        std::sort(fams.begin(), fams.end());
        return CountResult{Kind::Infinite, {}, std::move(fams)};
    }

    size_t count() const { return points.size(); }
};

namespace detail {

struct LDL {
    std::vector<std::vector<Rat>> l;  // unit lower triangular
    std::vector<Rat> d;               // positive diagonal
};

inline LDL ldl_decompose(const std::vector<std::vector<Int>>& a) {
    const int m = static_cast<int>(a.size());
    LDL out;
    out.l.assign(m, std::vector<Rat>(m, Rat(0)));
    out.d.assign(m, Rat(0));
    for (int j = 0; j < m; ++j) {
        Rat dj = Rat(a[j][j]);
        for (int k = 0; k < j; ++k) dj -= out.l[j][k] * out.l[j][k] * out.d[k];
        if (dj <= 0) raise("NotPositiveDefinite", "LDL pivot is not positive");
        out.d[j] = dj;
        out.l[j][j] = 1;
        for (int i = j + 1; i < m; ++i) {
            Rat v = Rat(a[i][j]);
            for (int k = 0; k < j; ++k) v -= out.l[i][k] * out.l[j][k] * out.d[k];
            out.l[i][j] = v / dj;
        }
    }
    return out;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// gcd of all integer coefficients of Q(x) = x^T A x - b.x as a polynomial
// with cross terms written 2A_ij; zero when the form is identically zero
inline Int q_content(const QForm& q) {
    Int g = 0;
    const int m = q.dim();
    for (int i = 0; i < m; ++i) {
        g = gcd(g, q.gram[i][i]);
        for (int j = i + 1; j < m; ++j) g = gcd(g, 2 * q.gram[i][j]);
        g = gcd(g, q.linear[i]);
    }
    return g;
}

}  // namespace detail

// All integer (or nonnegative-integer) points with Q(x) <= s, listed exactly
// by rational completing-the-square bounds per coordinate. Empty is returned
// only when s lies below the real minimum of Q.
inline CountResult enumerate_sublevel(const QForm& q, const Int& s, Domain domain) {
    q.validate();
    if (!decide_decency(q).decent)
        raise("NotPositiveDefinite", "sublevel enumeration needs a positive definite part");
    const int m = q.dim();
    Minimum mininfo = q_minimum(q);
    Rat budget = Rat(s) - mininfo.value;
    budget.canonicalize();
    if (budget < 0) return CountResult::empty();

    detail::LDL f = detail::ldl_decompose(q.gram);
    std::vector<std::vector<Int>> points;
    std::vector<Int> x(m, 0);

    // coordinates are fixed from the last to the first; at each level the
    // residual budget bounds (x_j - c_j)^2 by r_j / d_j exactly
    std::function<void(int, Rat)> descend = [&](int j, Rat rem) {
        Rat offset = 0;
        for (int i = j + 1; i < m; ++i) offset += f.l[i][j] * (Rat(x[i]) - mininfo.vertex[i]);
        Rat center = mininfo.vertex[j] - offset;
        Rat radius_sq = rem / f.d[j];
        Int lo = ceil_minus_sqrt(center, radius_sq);
        Int hi = floor_plus_sqrt(center, radius_sq);
        if (domain == Domain::Nonnegatives && lo < 0) lo = 0;
        for (Int v = lo; v <= hi; ++v) {
            x[j] = v;
            Rat z = Rat(v) - center;
            Rat used = f.d[j] * z * z;
            if (used > rem) continue;  // possible only after the lo clamp
            if (j == 0)
                points.push_back(x);
            else
                descend(j - 1, rem - used);
        }
    };
    descend(m - 1, budget);
    return CountResult::finite(std::move(points));
}

struct Representable {
    bool representable = false;
    std::vector<Int> witness;  // populated when representable
    enum class Certificate { None, ExhaustedEnumeration, Modulus } certificate = Certificate::None;
    Int modulus = 0;  // populated for Certificate::Modulus
};

namespace detail {

inline bool interval_hits_residues(const Int& lo, const Int& hi, const Int& modulus,
                                   const std::set<Int>& residues) {
    if (hi - lo + 1 >= modulus) return !residues.empty();
    for (Int v = lo; v <= hi; ++v) {
        Int r = v % modulus;
        if (r < 0) r += modulus;
        if (residues.count(r)) return true;
    }
    return false;
}

// bounded lexicographic witness scan; empty result when the box holds none
inline std::vector<Int> witness_in_box(const QForm& q, const Int& lo, const Int& hi, Domain domain,
                                       long box) {
    const int m = q.dim();
    std::vector<Int> x(m, 0), found;
    std::function<void(int)> scan = [&](int pos) {
        if (!found.empty()) return;
        if (pos == m) {
            Int v = q_eval(q, x);
            if (v >= lo && v <= hi) found = x;
            return;
        }
        long start = domain == Domain::Nonnegatives ? 0 : -box;
        for (long v = start; v <= box && found.empty(); ++v) {
            x[pos] = v;
            scan(pos + 1);
        }
    };
    scan(0);
    return found;
}

}  // namespace detail

// Does Q attain a value in [lo, hi]? Positive definite forms are decided by
// exact sublevel enumeration. Otherwise the implemented obstructions are the
// coefficient content and small moduli; failing those, a bounded witness
// search runs and Undecidable is raised when it finds nothing.
inline Representable representable(const QForm& q, const Int& lo, const Int& hi, Domain domain) {
    q.validate();
    if (lo > hi) raise("InvalidArgument", "empty interval");
    const int m = q.dim();

    if (decide_decency(q).decent) {
        CountResult cr = enumerate_sublevel(q, hi, domain);
        for (const auto& p : cr.points) {
            Int v = q_eval(q, p);
            if (v >= lo && v <= hi) return {true, p, Representable::Certificate::None, 0};
        }
        return {false, {}, Representable::Certificate::ExhaustedEnumeration, 0};
    }

    // content obstruction first: every value of Q is divisible by the content,
    // so an interval holding no multiple of it proves non-representability
    Int g = detail::q_content(q);
    if (g > 1) {
        bool hit = false;
        for (Int v = lo; v <= hi; ++v)
            if (v % g == 0) {
                hit = true;
                break;
            }
        if (!hit) return {false, {}, Representable::Certificate::Modulus, g};
    }

    // a cheap witness scan settles most attainable queries
    auto w = detail::witness_in_box(q, lo, hi, domain, 4);
    if (!w.empty()) return {true, w, Representable::Certificate::None, 0};

    // small-modulus scan over the full residue cube
    for (long modulus = 2; modulus <= 36; ++modulus) {
        Int mo(modulus);
        std::set<Int> residues;
        std::vector<Int> x(m, 0);
        std::function<void(int)> fill = [&](int pos) {
            if (pos == m) {
                Int r = q_eval(q, x) % mo;
                if (r < 0) r += mo;
                residues.insert(r);
                return;
            }
            for (long v = 0; v < modulus; ++v) {
                x[pos] = v;
                fill(pos + 1);
            }
        };
        fill(0);
        if (!detail::interval_hits_residues(lo, hi, mo, residues))
            return {false, {}, Representable::Certificate::Modulus, mo};
    }

    // wider witness search before giving up
    for (long box : {16L, 48L}) {
        w = detail::witness_in_box(q, lo, hi, domain, box);
        if (!w.empty()) return {true, w, Representable::Certificate::None, 0};
    }

    raise("Undecidable", "no obstruction applies and the bounded search found no witness");
}

// Non-certified closed-form count bounds for sublevel sets, evaluated in
// floating point. One variable: sqrt(b^2 + 4 a s)/a + 1. Two variables:
// pi (s - min)/sqrt(det A) + 8 + 16 sqrt((s - min)/lambda_min), the ellipse
// area plus a boundary error term.
inline double closed_form_bound(const QForm& q, const Int& s) {
    q.validate();
    if (!decide_decency(q).decent)
        raise("NotPositiveDefinite", "the closed-form bounds need a positive definite part");
    const int m = q.dim();
    if (m == 1) {
        Int disc = q.linear[0] * q.linear[0] + 4 * q.gram[0][0] * s;
        if (disc < 0) return 0.0;
        return std::sqrt(disc.get_d()) / q.gram[0][0].get_d() + 1.0;
    }
    if (m == 2) {
        Minimum mn = q_minimum(q);
        Rat excess = Rat(s) - mn.value;
        excess.canonicalize();
        if (excess < 0) return 0.0;
        double r = excess.get_d();
        double det = Int(q.gram[0][0] * q.gram[1][1] - q.gram[0][1] * q.gram[1][0]).get_d();
        double tr = Int(q.gram[0][0] + q.gram[1][1]).get_d();
        double lambda_min = (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
        const double pi = 3.14159265358979323846;
        return pi * r / std::sqrt(det) + 8.0 + 16.0 * std::sqrt(r / lambda_min);
    }
    raise("UnsupportedDimension", "closed-form bounds exist for one and two variables");
}

enum class N3Method { BoundedBox, HyperbolaFactor };

namespace detail {

inline std::vector<Int> divisors_with_sign(const Int& c) {
    std::vector<Int> out;
    Int a = abs(c);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        Int e = a / d;
        out.push_back(d);
        out.push_back(-d);
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

// minimal y >= floor such that A x^2 - b x > p for every integer x > y
inline Int minimal_tail_bound(const Int& a, const Int& b, const Int& p, long floor_start) {
    auto min_beyond = [&](const Int& y) {
        // convex, so the minimum over integers > y sits at the clamped vertex
        Int lo = y + 1;
        Int vfloor = rat_floor(Rat(b, 2 * a));
        std::vector<Int> cand = {lo};
        if (vfloor >= lo) cand.push_back(vfloor);
        if (vfloor + 1 >= lo) cand.push_back(vfloor + 1);
        Int best = a * cand[0] * cand[0] - b * cand[0];
        for (const auto& x : cand) best = std::min(best, Int(a * x * x - b * x));
        return best;
    };
    Int y(floor_start);
    while (min_beyond(y) <= p) y += 1;
    return y;
}

inline CountResult bounded_box_count(const QForm& q, const Int& p) {
    const auto& a = q.gram;
    const auto& b = q.linear;
    auto shape_fail = [&](const std::string& why) {
        raise("ShapeMismatch", "bounded-box method does not apply: " + why);
    };
    if (a[0][0] != 0) shape_fail("x1 must appear only linearly");
    if (a[1][1] <= 0 || a[2][2] <= 0) shape_fail("x2^2 and x3^2 need positive coefficients");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[i][j] < 0) shape_fail("cross terms must be nonnegative on N^3");
    if (b[0] <= 0 || b[1] < 0 || b[2] < 0) shape_fail("linear terms must be effective");
    // groupings that force Q > p outside the box, checked at the floors
    if (12 * a[0][1] < b[0] || 12 * a[1][2] < b[2])
        shape_fail("x2-tail grouping fails at the floor y2 = 5");
    if (8 * a[0][2] < b[0] || 8 * a[1][2] < b[1])
        shape_fail("x3-tail grouping fails at the floor y3 = 3");
    // the coefficient of x1 can never vanish
    Int lin_gcd = gcd(2 * a[0][1], 2 * a[0][2]);
    if (lin_gcd == 0 || b[0] % lin_gcd == 0)
        shape_fail("the x1 coefficient 2A12 x2 + 2A13 x3 - b1 can vanish");

    Int y2 = minimal_tail_bound(a[1][1], b[1], p, 5);
    Int y3 = minimal_tail_bound(a[2][2], b[2], p, 3);

    std::vector<std::vector<Int>> pts;
    for (Int x2 = 0; x2 <= y2; ++x2) {
        for (Int x3 = 0; x3 <= y3; ++x3) {
            Int coeff = 2 * a[0][1] * x2 + 2 * a[0][2] * x3 - b[0];
            Int rest = a[1][1] * x2 * x2 + 2 * a[1][2] * x2 * x3 + a[2][2] * x3 * x3 -
                       b[1] * x2 - b[2] * x3;
            Int num = p - rest;
            if (num % coeff != 0) continue;
            Int x1 = num / coeff;
            if (x1 < 0) continue;
            pts.push_back({x1, x2, x3});
        }
    }
    return CountResult::finite(std::move(pts));
}

inline CountResult hyperbola_factor_count(const QForm& q, const Int& p, const Int& content) {
    const auto& a = q.gram;
    const auto& b = q.linear;
    auto shape_fail = [&](const std::string& why) {
        raise("ShapeMismatch", "hyperbola method does not apply: " + why);
    };
    if (a[0][0] != 0 || a[2][2] != 0) shape_fail("x1^2 and x3^2 must vanish");
    Int g = content;
    if (g <= 0) shape_fail("the form is identically zero");
    Int c12 = 2 * a[0][1] / g, c13 = 2 * a[0][2] / g, c22 = a[1][1] / g, c23 = 2 * a[1][2] / g;
    Int d1 = -b[0] / g, d2 = -b[1] / g, d3 = -b[2] / g;
    if (c12 != c23 || d1 != d3) shape_fail("the form is not symmetric in x1 and x3");
    if (c13 <= 0 || c22 <= 0 || c12 <= 0) shape_fail("needs positive x1x3, x2^2 and x1x2 parts");
    if (p % g != 0) return CountResult::finite({});
    Int phat = p / g;

    // smallest lambda > 0 with lambda*c13 a perfect square
    Int lambda = 1;
    {
        Int rest = c13;
        for (Int f = 2; f * f <= rest; ++f)
            while (rest % (f * f) == 0) rest /= f * f;
        lambda = rest;  // squarefree part
    }
    Int u = isqrt_floor(lambda * c13);
    if (u * u != lambda * c13) shape_fail("internal square extraction failed");
    if ((lambda * c12) % u != 0 || (lambda * d1) % u != 0)
        shape_fail("the factorization is not integral");
    Int w = lambda * c12 / u;
    Int t = lambda * d1 / u;

    // (u x1 + w x2 + t)(u x3 + w x2 + t) = lambda*phat + R(x2) with
    // R(x2) = (w^2 - lambda c22) x2^2 + (2 w t - lambda d2) x2 + t^2
    auto constant_term = [&](const Int& x2) -> Int {
        return lambda * phat + (w * w - lambda * c22) * x2 * x2 +
               (2 * w * t - lambda * d2) * x2 + t * t;
    };

    std::vector<std::vector<Int>> pts;
    std::vector<Family> families;
    for (Int x2 = 0;; ++x2) {
        Int shift = w * x2 + t;
        bool tail_open = shift <= 0;
        if (!tail_open && c22 * x2 * x2 + d2 * x2 > phat) break;
        Int c = constant_term(x2);
        if (c == 0) {
            // a factor vanishes identically in the other variable
            if (shift <= 0 && (-shift) % u == 0) {
                Int fixed = -shift / u;
                families.push_back({{fixed, x2, Int(0)}, {Int(0), Int(0), Int(1)}});
                families.push_back({{Int(0), x2, fixed}, {Int(1), Int(0), Int(0)}});
            }
            continue;
        }
        for (const Int& r : divisors_with_sign(c)) {
            Int sdiv = c / r;
            Int n1 = r - shift, n3 = sdiv - shift;
            if (n1 % u != 0 || n3 % u != 0) continue;
            Int x1 = n1 / u, x3 = n3 / u;
            if (x1 < 0 || x3 < 0) continue;
            pts.push_back({x1, x2, x3});
        }
    }
    if (!families.empty()) return CountResult::infinite(std::move(families));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return CountResult::finite(std::move(pts));
}

}  // namespace detail

// Exact solution count of Q(x) = p over N^3 for the product-ambient forms,
// by the method named: BoundedBox bounds x2, x3 and solves the residual
// linear equation in x1; HyperbolaFactor factors the equation per x2 and
// counts divisor pairs, reporting one-parameter families when a constant
// term vanishes and the hyperbola degenerates.
inline CountResult restricted_count_n3(const QForm& q, const Int& p, N3Method method) {
    q.validate();
    if (q.dim() != 3) raise("ShapeMismatch", "the N^3 procedures are three-variable");
    Int g = detail::q_content(q);
    if (g > 1 && p % g != 0) return CountResult::finite({});
    if (method == N3Method::BoundedBox) return detail::bounded_box_count(q, p);
    return detail::hyperbola_factor_count(q, p, g);
}

}  // namespace fourfold
