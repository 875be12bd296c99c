#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"

namespace fourfold {

using Exponents = std::vector<int>;

// Graded-lexicographic order, greatest term first: higher total degree wins,
// ties broken by the lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. Canonical form: variable list sorted and pruned of unused
// names, no zero coefficients, terms ordered graded-lexicographically.
// Structurally equal polynomials therefore compare equal field by field.
class Poly {
public:
    using TermMap = std::map<Exponents, Int, GrlexGreater>;

    Poly() = default;

    static Poly constant(Int c) {
        Poly p;
        if (c != 0) p.terms_[Exponents{}] = std::move(c);
        return p;
    }

    static Poly variable(const std::string& name, int exp = 1, Int coeff = 1) {
        Poly p;
        if (coeff != 0 && exp != 0) {
            p.vars_ = {name};
            p.terms_[Exponents{exp}] = std::move(coeff);
        } else if (coeff != 0) {
            p.terms_[Exponents{}] = std::move(coeff);
        }
        return p;
    }

    static Poly make(std::vector<std::string> vars,
                     const std::vector<std::pair<Exponents, Int>>& terms) {
        Poly p;
        p.vars_ = std::move(vars);
        for (const auto& [e, c] : terms) {
            if (e.size() != p.vars_.size())
                raise("ExponentMismatch", "term exponent length differs from variable list");
            if (c == 0) continue;
            p.terms_[e] += c;
            if (p.terms_[e] == 0) p.terms_.erase(e);
        }
        p.canonicalize();
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
    }

    Int constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Exponents(vars_.size(), 0));
        return it == terms_.end() ? Int(0) : it->second;
    }

    // highest total degree; -1 for the zero polynomial
    int total_degree() const {
        if (terms_.empty()) return -1;
        const Exponents& e = terms_.begin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    int weighted_degree(const std::vector<int>& weights) const {
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
            best = std::max(best, d);
        }
        return best;
    }

    bool is_homogeneous(const std::vector<int>& weights) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (size_t i = 0; i < e.size(); ++i) t += e[i] * weights[i];
            if (d == -1) d = t;
            if (t != d) return false;
        }
        return true;
    }

    Int coefficient(const std::map<std::string, int>& monomial) const {
        Exponents e(vars_.size(), 0);
        for (const auto& [name, exp] : monomial) {
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                if (exp != 0) return 0;
                continue;
            }
            e[it - vars_.begin()] = exp;
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // embeds into a superset variable list (sorted union expected)
    Poly aligned_to(const std::vector<std::string>& target) const {
        Poly out;
        out.vars_ = target;
        std::vector<int> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
            if (it == target.end() || *it != vars_[i])
                raise("AlignmentError", "variable " + vars_[i] + " missing from target list");
            pos[i] = static_cast<int>(it - target.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            out.terms_[std::move(ne)] = c;
        }
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return combined(a, b, +1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combined(a, b, -1); }

    Poly operator-() const {
        Poly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        auto vars = merged_variables(a.vars_, b.vars_);
        Poly pa = a.aligned_to(vars), pb = b.aligned_to(vars);
        Poly out;
        out.vars_ = vars;
        for (const auto& [ea, ca] : pa.terms_) {
            for (const auto& [eb, cb] : pb.terms_) {
                Exponents e(vars.size());
                for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
                Int& slot = out.terms_[std::move(e)];
                slot += ca * cb;
            }
        }
        out.strip_zeros();
        out.canonicalize();
        return out;
    }

    friend Poly operator*(const Int& c, const Poly& p) {
        if (c == 0) return Poly();
        Poly out = p;
        for (auto& [e, v] : out.terms_) v *= c;
        return out;
    }

    Poly pow(int k) const {
        if (k < 0) raise("NegativeExponent", "Poly::pow: negative exponent");
        Poly acc = Poly::constant(1);
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += a.get_str();
            } else if (a == 1) {
                out += mono;
            } else {
                out += a.get_str() + "*" + mono;
            }
        }
        return out;
    }

    static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b) {
        std::vector<std::string> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

private:
    static Poly combined(const Poly& a, const Poly& b, int sign) {
        auto vars = merged_variables(a.vars_, b.vars_);
        Poly pa = a.aligned_to(vars), pb = b.aligned_to(vars);
        Poly out;
        out.vars_ = vars;
        out.terms_ = std::move(pa.terms_);
        for (const auto& [e, c] : pb.terms_) {
            Int& slot = out.terms_[e];
            slot += sign > 0 ? c : -c;
        }
        out.strip_zeros();
        out.canonicalize();
        return out;
    }

    void strip_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    // sorts the variable list and prunes variables unused by every term
    void canonicalize() {
        if (!std::is_sorted(vars_.begin(), vars_.end())) {
            std::vector<size_t> order(vars_.size());
            std::iota(order.begin(), order.end(), size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](size_t i, size_t j) { return vars_[i] < vars_[j]; });
            std::vector<std::string> nv(vars_.size());
            for (size_t i = 0; i < order.size(); ++i) nv[i] = vars_[order[i]];
            TermMap nt;
            for (const auto& [e, c] : terms_) {
                Exponents ne(e.size());
                for (size_t i = 0; i < order.size(); ++i) ne[i] = e[order[i]];
                nt[std::move(ne)] = c;
            }
            vars_ = std::move(nv);
            terms_ = std::move(nt);
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt[std::move(ne)] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    std::vector<std::string> vars_;  // sorted, every entry used by some term
    TermMap terms_;
};

// simultaneous substitution: each variable maps to a Poly (identity when absent)
inline Poly substitute(const Poly& p, const std::map<std::string, Poly>& repl) {
    Poly out;
    const auto& vars = p.variables();
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(c);
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = repl.find(vars[i]);
            Poly base = it == repl.end() ? Poly::variable(vars[i]) : it->second;
            term = term * base.pow(e[i]);
        }
        out = out + term;
    }
    return out;
}

// elementary symmetric polynomial e_k(xs) as an expanded Poly
inline Poly elementary_symmetric(const std::vector<std::string>& xs, int k) {
    if (k < 0 || k > static_cast<int>(xs.size())) return Poly();
    if (k == 0) return Poly::constant(1);
    // DP over prod (1 + x_i t), collecting the t^k coefficient
    std::vector<Poly> e(k + 1);
    e[0] = Poly::constant(1);
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly xv = Poly::variable(xs[i]);
        for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * xv;
    }
    return e[k];
}

inline bool is_symmetric(const Poly& p, const std::vector<std::string>& vars) {
    auto all = Poly::merged_variables(p.variables(), [&] {
        auto v = vars;
        std::sort(v.begin(), v.end());
        return v;
    }());
    Poly q = p.aligned_to(all);
    std::vector<int> pos;
    for (const auto& v : vars) {
        auto it = std::lower_bound(all.begin(), all.end(), v);
        pos.push_back(static_cast<int>(it - all.begin()));
    }
    // adjacent transpositions generate the full symmetric group
    for (size_t s = 0; s + 1 < pos.size(); ++s) {
        Poly::TermMap swapped;
        for (const auto& [e, c] : q.terms()) {
            Exponents ne = e;
            std::swap(ne[pos[s]], ne[pos[s + 1]]);
            swapped[std::move(ne)] = c;
        }
        if (swapped != q.terms()) return false;
    }
    return true;
}

namespace detail {

// rewrite a polynomial symmetric in `vars` (integer coefficients only, no
// extra variables) in the elementary basis, by leading-term subtraction
inline Poly symmetric_reduce_pure(const Poly& p, const std::vector<std::string>& vars,
                                  const std::vector<std::string>& out_names) {
    const size_t n = vars.size();
    std::vector<std::string> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());

    std::vector<Poly> e(n + 1);
    for (size_t k = 1; k <= n; ++k) e[k] = elementary_symmetric(vars, static_cast<int>(k));

    // position of vars[i] within the sorted alignment
    std::vector<int> pos(n);
    for (size_t i = 0; i < n; ++i) {
        auto it = std::lower_bound(sorted_vars.begin(), sorted_vars.end(), vars[i]);
        pos[i] = static_cast<int>(it - sorted_vars.begin());
    }

    Poly rem = p.is_zero() ? p : p.aligned_to(sorted_vars);
    Poly out;
    while (!rem.is_zero()) {
        const auto& [lead_exp, lead_coeff] = *rem.terms().begin();
        // exponents of the leading monomial in the caller's variable order
        std::vector<int> a(n, 0);
        for (size_t i = 0; i < n; ++i) a[i] = lead_exp[pos[i]];
        for (size_t i = 0; i + 1 < n; ++i)
            if (a[i] < a[i + 1])
                raise("NotSymmetric", "leading monomial not weakly decreasing");
        Poly basis_term = Poly::constant(lead_coeff);
        Poly expanded = Poly::constant(lead_coeff);
        for (size_t k = 0; k < n; ++k) {
            int mult = a[k] - (k + 1 < n ? a[k + 1] : 0);
            if (mult == 0) continue;
            basis_term = basis_term * Poly::variable(out_names[k], mult);
            expanded = expanded * e[k + 1].pow(mult);
        }
        out = out + basis_term;
        rem = rem - expanded;
        if (!rem.is_zero()) rem = rem.aligned_to(sorted_vars);
    }
    return out;
}

}  // namespace detail

// Rewrite p, symmetric under permutations of `vars`, as a polynomial in the
// elementary symmetric functions of `vars` (named out_names[0..n-1], which
// default to e1..en). Variables of p outside `vars` are carried through
// unchanged. Throws NotSymmetric when a permutation changes p.
inline Poly symmetric_reduce(const Poly& p, const std::vector<std::string>& vars,
                             std::vector<std::string> out_names = {}) {
    const size_t n = vars.size();
    if (out_names.empty())
        for (size_t k = 1; k <= n; ++k) out_names.push_back("e" + std::to_string(k));
    if (out_names.size() != n)
        raise("ArityMismatch", "symmetric_reduce: need one output name per variable");
    if (!is_symmetric(p, vars)) raise("NotSymmetric", "polynomial is not symmetric in the given variables");
    if (p.is_zero()) return p;

    std::vector<std::string> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    auto all = Poly::merged_variables(p.variables(), sorted_vars);
    Poly q = p.aligned_to(all);

    std::vector<bool> in_family(all.size(), false);
    for (const auto& v : sorted_vars) {
        auto it = std::lower_bound(all.begin(), all.end(), v);
        in_family[it - all.begin()] = true;
    }

    // split each term into its family part and its carried-through cofactor,
    // group by cofactor, then reduce each group as a pure symmetric poly
    std::map<Exponents, std::vector<std::pair<Exponents, Int>>> groups;
    for (const auto& [e, c] : q.terms()) {
        Exponents fam, rest;
        for (size_t i = 0; i < e.size(); ++i)
            (in_family[i] ? fam : rest).push_back(e[i]);
        groups[rest].emplace_back(std::move(fam), c);
    }

    std::vector<std::string> rest_vars;
    for (size_t i = 0; i < all.size(); ++i)
        if (!in_family[i]) rest_vars.push_back(all[i]);

    Poly out;
    for (const auto& [rest_exp, fam_terms] : groups) {
        Poly fam_poly = Poly::make(sorted_vars, fam_terms);
        Poly reduced = detail::symmetric_reduce_pure(fam_poly, vars, out_names);
        Poly cof = Poly::constant(1);
        for (size_t i = 0; i < rest_vars.size(); ++i)
            if (rest_exp[i] != 0) cof = cof * Poly::variable(rest_vars[i], rest_exp[i]);
        out = out + reduced * cof;
    }
    return out;
}

}  // namespace fourfold
