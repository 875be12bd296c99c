#pragma once

#include <variant>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"

namespace fourfold {

// Geometric constraints on a smooth surface, translated into bounds on the
// invariant deg(c1^2 - c2) of its tangent bundle.
struct NotGeneralType {};
struct ChiAtMost {
    Int r;
};
struct ChiAndK2 {
    Int r;
    Int q;
};
using SurfaceConstraint = std::variant<NotGeneralType, ChiAtMost, ChiAndK2>;

enum class BoundKind { UpperBound, ExactValue };

// NotGeneralType -> <= 6 (minimal-surface classification)
// ChiAtMost(r)   -> <= 6r (classification + Bogomolov-Miyaoka-Yau)
// ChiAndK2(r,q)  -> exactly -12r + 2q (Noether)
inline std::pair<BoundKind, Int> invariant_threshold(const SurfaceConstraint& c) {
    if (std::holds_alternative<NotGeneralType>(c)) return {BoundKind::UpperBound, Int(6)};
    if (const auto* chi = std::get_if<ChiAtMost>(&c))
        return {BoundKind::UpperBound, 6 * chi->r};
    const auto& both = std::get<ChiAndK2>(c);
    return {BoundKind::ExactValue, -12 * both.r + 2 * both.q};
}

// chi(O_S) = (c1^2 + c2) / 12; inconsistent Chern numbers are an error
inline Int chi_noether(const Int& c1sq, const Int& c2) {
    Int total = c1sq + c2;
    if (total % 12 != 0)
        raise("NoetherViolation", "c1^2 + c2 = " + total.get_str() + " is not divisible by 12");
    return total / 12;
}

inline Int invariant_from_chern(const Int& c1sq, const Int& c2) { return c1sq - c2; }

// blowing up at `points` points drops the invariant by 2 per point
inline Int blowup_invariant(const Int& inv, const Int& points) {
    if (points < 0) raise("InvalidArgument", "cannot blow up a negative number of points");
    return inv - 2 * points;
}

}  // namespace fourfold
