#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"
#include "fourfold/poly.hpp"
#include "fourfold/schubert.hpp"

namespace fourfold {

// The three ambient families whose numerical rings the engine understands:
// projective space P^n, a product P^a x P^b, and a Grassmannian G(l,n).
class AmbientModel {
public:
    enum class Kind { Projective, Product, Grassmannian };

    static AmbientModel projective(int n) {
        if (n < 4) raise("InvalidAmbient", "projective space needs n >= 4");
        return AmbientModel(Kind::Projective, n, 0);
    }

    static AmbientModel product(int a, int b) {
        if (a < 2 || b < 2) raise("InvalidAmbient", "product factors need a, b >= 2");
        return AmbientModel(Kind::Product, a, b);
    }

    static AmbientModel grassmannian(int l, int n) {
        if (l < 1 || l >= n) raise("InvalidAmbient", "Grassmannian needs 1 <= l < n");
        return AmbientModel(Kind::Grassmannian, l, n);
    }

    Kind kind() const { return kind_; }
    int n() const { return p1_; }   // Projective
    int a() const { return p1_; }   // Product
    int b() const { return p2_; }   // Product
    int gr_l() const { return p1_; }  // Grassmannian
    int gr_n() const { return p2_; }  // Grassmannian

    int dimension() const {
        switch (kind_) {
            case Kind::Projective: return p1_;
            case Kind::Product: return p1_ + p2_;
            case Kind::Grassmannian: return p1_ * (p2_ - p1_);
        }
        return 0;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Projective: return "P^" + std::to_string(p1_);
            case Kind::Product:
                return "P^" + std::to_string(p1_) + " x P^" + std::to_string(p2_);
            case Kind::Grassmannian:
                return "G(" + std::to_string(p1_) + "," + std::to_string(p2_) + ")";
        }
        return "?";
    }

    friend bool operator==(const AmbientModel& x, const AmbientModel& y) {
        return x.kind_ == y.kind_ && x.p1_ == y.p1_ && x.p2_ == y.p2_;
    }
    friend bool operator!=(const AmbientModel& x, const AmbientModel& y) { return !(x == y); }

private:
    AmbientModel(Kind k, int p1, int p2) : kind_(k), p1_(p1), p2_(p2) {}
    Kind kind_;
    int p1_, p2_;
};

// A homogeneous element of the numerical ring N*(V), reduced modulo the
// ambient's relations: zeta^{n+1} = 0, alpha^{a+1} = beta^{b+1} = 0, or
// Schubert box truncation. Polynomial ambients use the variables "z" for
// the hyperplane class and "a","b" for the two pulled-back hyperplanes.
class RingClass {
public:
    RingClass(AmbientModel ambient, int grade, Poly rep)
        : ambient_(std::move(ambient)), grade_(grade), rep_(truncate(ambient_, std::move(rep))) {
        if (ambient_.kind() == AmbientModel::Kind::Grassmannian)
            raise("InvalidRepresentation", "Grassmannian classes take a SchubertExpr");
        check_poly_grade();
    }

    RingClass(AmbientModel ambient, int grade, SchubertExpr rep)
        : ambient_(std::move(ambient)), grade_(grade), schub_(std::move(rep)) {
        if (ambient_.kind() != AmbientModel::Kind::Grassmannian)
            raise("InvalidRepresentation", "polynomial ambients take a Poly");
        if (schub_->l() != ambient_.gr_l() || schub_->n() != ambient_.gr_n())
            raise("AmbientMismatch", "Schubert expression box differs from the ambient");
        auto g = schub_->grade();
        if (g && *g != grade_)
            raise("GradeMismatch", "representation grade differs from declared grade");
    }

    static RingClass zero(const AmbientModel& ambient, int grade) {
        if (ambient.kind() == AmbientModel::Kind::Grassmannian)
            return RingClass(ambient, grade, SchubertExpr(ambient.gr_l(), ambient.gr_n()));
        return RingClass(ambient, grade, Poly());
    }

    static RingClass unit(const AmbientModel& ambient) {
        if (ambient.kind() == AmbientModel::Kind::Grassmannian)
            return RingClass(ambient, 0, SchubertExpr::unit(ambient.gr_l(), ambient.gr_n()));
        return RingClass(ambient, 0, Poly::constant(1));
    }

    const AmbientModel& ambient() const { return ambient_; }
    int grade() const { return grade_; }
    bool is_zero() const { return schub_ ? schub_->is_zero() : rep_.is_zero(); }

    const Poly& poly() const {
        if (schub_) raise("InvalidRepresentation", "class is Schubert-represented");
        return rep_;
    }
    const SchubertExpr& schubert() const {
        if (!schub_) raise("InvalidRepresentation", "class is polynomial-represented");
        return *schub_;
    }

    friend RingClass operator+(const RingClass& x, const RingClass& y) {
        x.require_compatible(y);
        if (x.schub_) return RingClass(x.ambient_, x.grade_, *x.schub_ + *y.schub_);
        return RingClass(x.ambient_, x.grade_, x.rep_ + y.rep_);
    }

    friend RingClass operator-(const RingClass& x, const RingClass& y) {
        x.require_compatible(y);
        if (x.schub_) return RingClass(x.ambient_, x.grade_, *x.schub_ - *y.schub_);
        return RingClass(x.ambient_, x.grade_, x.rep_ - y.rep_);
    }

    friend RingClass operator*(const Int& c, const RingClass& x) {
        if (x.schub_) return RingClass(x.ambient_, x.grade_, c * *x.schub_);
        return RingClass(x.ambient_, x.grade_, c * x.rep_);
    }

    friend bool operator==(const RingClass& x, const RingClass& y) {
        if (x.ambient_ != y.ambient_) return false;
        if (x.is_zero() && y.is_zero()) return true;
        if (x.grade_ != y.grade_) return false;
        return x.schub_ ? *x.schub_ == *y.schub_ : x.rep_ == y.rep_;
    }
    friend bool operator!=(const RingClass& x, const RingClass& y) { return !(x == y); }

    std::string str() const { return schub_ ? schub_->str() : rep_.str(); }

private:
    void require_compatible(const RingClass& other) const {
        if (ambient_ != other.ambient_) raise("AmbientMismatch", "classes live in different ambients");
        if (!is_zero() && !other.is_zero() && grade_ != other.grade_)
            raise("GradeMismatch", "cannot combine classes of different grades");
    }

    static Poly truncate(const AmbientModel& ambient, Poly p) {
        if (p.is_zero()) return p;
        std::vector<std::pair<std::string, int>> caps;
        if (ambient.kind() == AmbientModel::Kind::Projective) {
            caps = {{"z", ambient.n()}};
        } else {
            caps = {{"a", ambient.a()}, {"b", ambient.b()}};
        }
        const auto& vars = p.variables();
        for (const auto& v : vars) {
            bool known = false;
            for (const auto& [name, cap] : caps) known = known || name == v;
            if (!known) raise("InvalidRepresentation", "unexpected ring variable " + v);
        }
        std::vector<std::pair<Exponents, Int>> kept;
        for (const auto& [e, c] : p.terms()) {
            bool dead = false;
            for (size_t i = 0; i < vars.size(); ++i)
                for (const auto& [name, cap] : caps)
                    if (vars[i] == name && e[i] > cap) dead = true;
            if (!dead) kept.emplace_back(e, c);
        }
        return Poly::make(vars, kept);
    }

    void check_poly_grade() const {
        if (rep_.is_zero()) return;
        std::vector<int> weights(rep_.variables().size(), 1);
        if (!rep_.is_homogeneous(weights) || rep_.weighted_degree(weights) != grade_)
            raise("GradeMismatch", "representation grade differs from declared grade");
    }

    AmbientModel ambient_;
    int grade_;
    Poly rep_;                          // Projective / Product
    std::optional<SchubertExpr> schub_;  // Grassmannian
};

inline RingClass ring_mul(const RingClass& x, const RingClass& y) {
    if (x.ambient() != y.ambient()) raise("AmbientMismatch", "classes live in different ambients");
    int grade = x.grade() + y.grade();
    if (x.ambient().kind() == AmbientModel::Kind::Grassmannian)
        return RingClass(x.ambient(), grade, lr_mul(x.schubert(), y.schubert()));
    return RingClass(x.ambient(), grade, x.poly() * y.poly());
}

// coefficient of the point class zeta^n, alpha^a beta^b, or sigma_{(n-l)^l}
inline Int degree(const RingClass& x) {
    const AmbientModel& V = x.ambient();
    if (!x.is_zero() && x.grade() != V.dimension())
        raise("NotTopGrade", "degree needs a class of top codimension");
    switch (V.kind()) {
        case AmbientModel::Kind::Projective:
            return x.poly().coefficient({{"z", V.n()}});
        case AmbientModel::Kind::Product:
            return x.poly().coefficient({{"a", V.a()}, {"b", V.b()}});
        case AmbientModel::Kind::Grassmannian: {
            std::vector<int> full(V.gr_l(), V.gr_n() - V.gr_l());
            return x.schubert().coefficient(Partition(full));
        }
    }
    return 0;
}

// the ordered basis of N^2(V): [zeta^2] | [sigma_2, sigma_{1,1}] | [a^2, ab, b^2]
inline std::vector<RingClass> codim2_basis(const AmbientModel& V) {
    std::vector<RingClass> out;
    switch (V.kind()) {
        case AmbientModel::Kind::Projective:
            out.emplace_back(V, 2, Poly::variable("z", 2));
            break;
        case AmbientModel::Kind::Grassmannian: {
            if (V.gr_n() - V.gr_l() >= 2)
                out.emplace_back(V, 2, SchubertExpr::single(V.gr_l(), V.gr_n(), Partition{2}));
            if (V.gr_l() >= 2)
                out.emplace_back(V, 2, SchubertExpr::single(V.gr_l(), V.gr_n(), Partition{1, 1}));
            break;
        }
        case AmbientModel::Kind::Product:
            out.emplace_back(V, 2, Poly::variable("a", 2));
            out.emplace_back(V, 2, Poly::variable("a") * Poly::variable("b"));
            out.emplace_back(V, 2, Poly::variable("b", 2));
            break;
    }
    return out;
}

inline std::vector<std::string> codim2_basis_labels(const AmbientModel& V) {
    switch (V.kind()) {
        case AmbientModel::Kind::Projective: return {"z^2"};
        case AmbientModel::Kind::Grassmannian: {
            std::vector<std::string> out;
            if (V.gr_n() - V.gr_l() >= 2) out.push_back("s(2)");
            if (V.gr_l() >= 2) out.push_back("s(1,1)");
            return out;
        }
        case AmbientModel::Kind::Product: return {"a^2", "a*b", "b^2"};
    }
    return {};
}

}  // namespace fourfold
