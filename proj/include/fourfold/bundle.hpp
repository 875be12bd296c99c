#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fourfold/chow.hpp"
#include "fourfold/error.hpp"
#include "fourfold/poly.hpp"
#include "fourfold/schubert.hpp"

namespace fourfold {

// Construction tree for a bundle on one of the ambient models. Atoms:
//   TautSub      tautological subbundle on G(l,n), rank l
//   TautDualSub  its dual, rank l (Chern roots x1..xl)
//   TautQuot     tautological quotient on G(l,n), rank n-l
//   LineBundle   O(d) on P^n or O(d,e) on P^a x P^b
struct BundleExpr {
    enum class Node { TautSub, TautDualSub, TautQuot, LineBundle, Dual, DirectSum, Tensor, Sym, Wedge };

    Node node = Node::TautSub;
    std::vector<Int> degrees;           // LineBundle only
    int k = 0;                          // Sym / Wedge only
    std::vector<BundleExpr> children;

    static BundleExpr taut_sub() { return BundleExpr{Node::TautSub, {}, 0, {}}; }
    static BundleExpr taut_dual_sub() { return BundleExpr{Node::TautDualSub, {}, 0, {}}; }
    static BundleExpr taut_quot() { return BundleExpr{Node::TautQuot, {}, 0, {}}; }
    static BundleExpr line_bundle(std::vector<Int> degs) {
        return BundleExpr{Node::LineBundle, std::move(degs), 0, {}};
    }
    static BundleExpr dual(BundleExpr e) { return BundleExpr{Node::Dual, {}, 0, {std::move(e)}}; }
    static BundleExpr direct_sum(std::vector<BundleExpr> parts) {
        return BundleExpr{Node::DirectSum, {}, 0, std::move(parts)};
    }
    static BundleExpr tensor(BundleExpr a, BundleExpr b) {
        return BundleExpr{Node::Tensor, {}, 0, {std::move(a), std::move(b)}};
    }
    static BundleExpr sym(int k, BundleExpr e) {
        return BundleExpr{Node::Sym, {}, k, {std::move(e)}};
    }
    static BundleExpr wedge(int k, BundleExpr e) {
        return BundleExpr{Node::Wedge, {}, k, {std::move(e)}};
    }
};

// A bundle split into Chern roots: each root is a linear form with integer
// coefficients in the ambient's base symbols (x1..xl for the dual
// tautological subbundle, y1..y_{n-l} for the quotient, z / a,b for the
// hyperplane classes). `families` records which symbol groups are formal
// Chern roots and the generator names their symmetric functions reduce to.
struct FormalBundle {
    struct Family {
        std::vector<std::string> roots;    // e.g. x1..xl
        std::vector<std::string> reduced;  // e.g. c1..cl
    };

    std::vector<Poly> roots;
    std::vector<Family> families;

    int rank() const { return static_cast<int>(roots.size()); }
};

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, int count) {
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

inline FormalBundle::Family e_family(int l) {
    return {numbered("x", l), numbered("c", l)};
}

inline FormalBundle::Family q_family(int l, int n) {
    return {numbered("y", n - l), numbered("q", n - l)};
}

inline void merge_families(std::vector<FormalBundle::Family>& into,
                           const std::vector<FormalBundle::Family>& from) {
    for (const auto& fam : from) {
        bool seen = false;
        for (const auto& have : into) seen = seen || have.roots == fam.roots;
        if (!seen) into.push_back(fam);
    }
}

}  // namespace detail

inline FormalBundle realize(const BundleExpr& expr, const AmbientModel& V) {
    using Node = BundleExpr::Node;
    const bool grass = V.kind() == AmbientModel::Kind::Grassmannian;
    switch (expr.node) {
        case Node::TautSub:
        case Node::TautDualSub: {
            if (!grass) raise("InvalidAtom", "tautological bundles need a Grassmannian ambient");
            FormalBundle fb;
            int sign = expr.node == Node::TautDualSub ? 1 : -1;
            for (int i = 1; i <= V.gr_l(); ++i)
                fb.roots.push_back(Int(sign) * Poly::variable("x" + std::to_string(i)));
            fb.families = {detail::e_family(V.gr_l())};
            return fb;
        }
        case Node::TautQuot: {
            if (!grass) raise("InvalidAtom", "tautological bundles need a Grassmannian ambient");
            FormalBundle fb;
            for (int i = 1; i <= V.gr_n() - V.gr_l(); ++i)
                fb.roots.push_back(Poly::variable("y" + std::to_string(i)));
            fb.families = {detail::q_family(V.gr_l(), V.gr_n())};
            return fb;
        }
        case Node::LineBundle: {
            FormalBundle fb;
            if (V.kind() == AmbientModel::Kind::Projective) {
                if (expr.degrees.size() != 1)
                    raise("InvalidAtom", "line bundle on P^n takes one degree");
                fb.roots.push_back(expr.degrees[0] * Poly::variable("z"));
            } else if (V.kind() == AmbientModel::Kind::Product) {
                if (expr.degrees.size() != 2)
                    raise("InvalidAtom", "line bundle on a product takes two degrees");
                fb.roots.push_back(expr.degrees[0] * Poly::variable("a") +
                                   expr.degrees[1] * Poly::variable("b"));
            } else {
                raise("InvalidAtom", "line-bundle atoms live on P^n or P^a x P^b");
            }
            return fb;
        }
        case Node::Dual: {
            FormalBundle fb = realize(expr.children[0], V);
            for (auto& r : fb.roots) r = -r;
            return fb;
        }
        case Node::DirectSum: {
            FormalBundle fb;
            for (const auto& child : expr.children) {
                FormalBundle part = realize(child, V);
                fb.roots.insert(fb.roots.end(), part.roots.begin(), part.roots.end());
                detail::merge_families(fb.families, part.families);
            }
            return fb;
        }
        case Node::Tensor: {
            FormalBundle acc = realize(expr.children[0], V);
            for (size_t i = 1; i < expr.children.size(); ++i) {
                FormalBundle next = realize(expr.children[i], V);
                std::vector<Poly> prod;
                for (const auto& r : acc.roots)
                    for (const auto& s : next.roots) prod.push_back(r + s);
                acc.roots = std::move(prod);
                detail::merge_families(acc.families, next.families);
            }
            return acc;
        }
        case Node::Sym: {
            FormalBundle base = realize(expr.children[0], V);
            FormalBundle fb;
            fb.families = base.families;
            // all k-multiset sums of the roots
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(idx.size()) == expr.k) {
                    Poly s;
                    for (int i : idx) s = s + base.roots[i];
                    fb.roots.push_back(s);
                    return;
                }
                for (int i = start; i < base.rank(); ++i) {
                    idx.push_back(i);
                    rec(i);
                    idx.pop_back();
                }
            };
            if (expr.k < 0) raise("InvalidAtom", "Sym needs k >= 0");
            if (expr.k == 0) fb.roots.push_back(Poly());
            else rec(0);
            return fb;
        }
        case Node::Wedge: {
            FormalBundle base = realize(expr.children[0], V);
            FormalBundle fb;
            fb.families = base.families;
            // all k-subset sums of the roots
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(idx.size()) == expr.k) {
                    Poly s;
                    for (int i : idx) s = s + base.roots[i];
                    fb.roots.push_back(s);
                    return;
                }
                for (int i = start; i < base.rank(); ++i) {
                    idx.push_back(i);
                    rec(i + 1);
                    idx.pop_back();
                }
            };
            if (expr.k < 0) raise("InvalidAtom", "Wedge needs k >= 0");
            if (expr.k == 0) fb.roots.push_back(Poly());
            else rec(0);
            return fb;
        }
    }
    raise("InvalidAtom", "unknown bundle node");
}

// c_k of the bundle: the k-th elementary symmetric function of its Chern
// roots, with each formal root family rewritten in its elementary basis
// (c1..cl for the dual tautological subbundle, q1..q_{n-l} for the quotient).
inline Poly chern_class(const FormalBundle& fb, int k) {
    if (k < 0 || k > fb.rank()) return Poly();
    if (k == 0) return Poly::constant(1);
    // DP across roots, truncating at degree k
    std::vector<Poly> e(k + 1);
    e[0] = Poly::constant(1);
    for (int i = 0; i < fb.rank(); ++i)
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] = e[j] + e[j - 1] * fb.roots[i];
    Poly out = e[k];
    for (const auto& fam : fb.families) out = symmetric_reduce(out, fam.roots, fam.reduced);
    return out;
}

namespace detail {

// interpret a reduced Chern polynomial as a ring class of the given grade
inline RingClass chern_poly_to_class(const Poly& p, const AmbientModel& V, int grade) {
    if (V.kind() == AmbientModel::Kind::Grassmannian) {
        SchubertExpr s = chern_to_schubert(p, V.gr_l(), V.gr_n());
        return RingClass(V, grade, std::move(s));
    }
    return RingClass(V, grade, p);
}

inline Poly ambient_tangent_chern(const AmbientModel& V, int k);

}  // namespace detail

// c1 of the ambient tangent bundle, as a reduced Chern polynomial
inline Poly ambient_tangent_c1_poly(const AmbientModel& V) {
    return detail::ambient_tangent_chern(V, 1);
}

// c2 of the ambient tangent bundle, as a reduced Chern polynomial
inline Poly ambient_tangent_c2_poly(const AmbientModel& V) {
    return detail::ambient_tangent_chern(V, 2);
}

inline RingClass ambient_tangent_c2(const AmbientModel& V) {
    return detail::chern_poly_to_class(ambient_tangent_c2_poly(V), V, 2);
}

namespace detail {

// Chern classes of the tangent bundle from the Euler sequences:
//   P^n:      0 -> O -> O(1)^{n+1} -> T -> 0
//   P^a x P^b: pullback Euler sequence on each factor, tangent = direct sum
//   G(l,n):   0 -> S (x) E -> E^n -> T -> 0  (S tautological sub, E its dual)
// In each case 0 -> B -> A -> T -> 0 gives c1(T) = c1(A) - c1(B) and
// c2(T) = c2(A) - c2(B) - c1(B) c1(T).
inline Poly ambient_tangent_chern(const AmbientModel& V, int k) {
    BundleExpr a_expr, b_expr;
    bool has_b = false;
    switch (V.kind()) {
        case AmbientModel::Kind::Projective: {
            std::vector<BundleExpr> lines(V.n() + 1, BundleExpr::line_bundle({Int(1)}));
            a_expr = BundleExpr::direct_sum(std::move(lines));
            break;
        }
        case AmbientModel::Kind::Product: {
            std::vector<BundleExpr> lines;
            for (int i = 0; i < V.a() + 1; ++i) lines.push_back(BundleExpr::line_bundle({Int(1), Int(0)}));
            for (int i = 0; i < V.b() + 1; ++i) lines.push_back(BundleExpr::line_bundle({Int(0), Int(1)}));
            a_expr = BundleExpr::direct_sum(std::move(lines));
            std::vector<BundleExpr> trivials(2, BundleExpr::line_bundle({Int(0), Int(0)}));
            b_expr = BundleExpr::direct_sum(std::move(trivials));
            has_b = true;
            break;
        }
        case AmbientModel::Kind::Grassmannian: {
            std::vector<BundleExpr> copies(V.gr_n(), BundleExpr::taut_dual_sub());
            a_expr = BundleExpr::direct_sum(std::move(copies));
            b_expr = BundleExpr::tensor(BundleExpr::taut_sub(), BundleExpr::taut_dual_sub());
            has_b = true;
            break;
        }
    }
    FormalBundle A = realize(a_expr, V);
    Poly a1 = chern_class(A, 1);
    if (k == 1) {
        if (!has_b) return a1;
        Poly b1 = chern_class(realize(b_expr, V), 1);
        return a1 - b1;
    }
    Poly a2 = chern_class(A, 2);
    if (!has_b) return a2;
    FormalBundle B = realize(b_expr, V);
    Poly b1 = chern_class(B, 1);
    Poly b2 = chern_class(B, 2);
    Poly t1 = a1 - b1;
    return a2 - b2 - b1 * t1;
}

}  // namespace detail

// The ambient class restricting to c2(T_X) for the zero locus X of a
// section of `normal`: c2(T_V) - c2(N). Requires the vanishing-first-Chern
// certificate c1(T_V) = c1(N); fails with NotCalabiYau otherwise.
inline Poly zero_locus_c2_poly(const AmbientModel& V, const BundleExpr& normal) {
    FormalBundle nb = realize(normal, V);
    Poly n1 = chern_class(nb, 1);
    Poly t1 = ambient_tangent_c1_poly(V);
    if (V.kind() == AmbientModel::Kind::Grassmannian) {
        // compare in the Schubert basis so E- and Q-generators can mix
        if (chern_to_schubert(n1, V.gr_l(), V.gr_n()) !=
            chern_to_schubert(t1, V.gr_l(), V.gr_n()))
            raise("NotCalabiYau", "c1 of the normal bundle differs from c1(T_V)");
    } else if (n1 != t1) {
        raise("NotCalabiYau", "c1 of the normal bundle differs from c1(T_V)");
    }
    return ambient_tangent_c2_poly(V) - chern_class(nb, 2);
}

inline RingClass zero_locus_c2(const AmbientModel& V, const BundleExpr& normal) {
    return detail::chern_poly_to_class(zero_locus_c2_poly(V, normal), V, 2);
}

// [X] for the zero locus of a section of `normal`: the top Chern class,
// of codimension dim(V) - 4.
inline RingClass fundamental_class(const AmbientModel& V, const BundleExpr& normal) {
    FormalBundle nb = realize(normal, V);
    int codim = V.dimension() - 4;
    if (nb.rank() != codim)
        raise("RankMismatch", "normal bundle rank " + std::to_string(nb.rank()) +
                                  " differs from codimension " + std::to_string(codim));
    Poly top = chern_class(nb, nb.rank());
    return detail::chern_poly_to_class(top, V, codim);
}

}  // namespace fourfold
