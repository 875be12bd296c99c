#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"
#include "fourfold/partition.hpp"
#include "fourfold/poly.hpp"

namespace fourfold {

// Integer combination of Schubert classes sigma_lambda of G(l,n); every
// partition fits the l x (n-l) box. Usually homogeneous of one codimension,
// but mixed grades are representable (grade() is empty then).
class SchubertExpr {
public:
    using TermMap = std::map<Partition, Int, PartitionSizeLexGreater>;

    SchubertExpr(int l, int n) : l_(l), n_(n) {
        if (l < 1 || l >= n) raise("BoxViolation", "need 1 <= l < n");
    }

    static SchubertExpr unit(int l, int n) {
        SchubertExpr e(l, n);
        e.terms_[Partition()] = 1;
        return e;
    }

    static SchubertExpr single(int l, int n, const Partition& la, Int coeff = 1) {
        SchubertExpr e(l, n);
        e.add(la, coeff);
        return e;
    }

    int l() const { return l_; }
    int n() const { return n_; }
    int cols() const { return n_ - l_; }
    int top_grade() const { return l_ * (n_ - l_); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // classes outside the box vanish in G(l,n)
    void add(const Partition& la, const Int& coeff) {
        if (coeff == 0 || !la.fits(l_, cols())) return;
        Int& slot = terms_[la];
        slot += coeff;
        if (slot == 0) terms_.erase(la);
    }

    Int coefficient(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // codimension when homogeneous; empty for 0 or mixed-grade sums
    std::optional<int> grade() const {
        std::optional<int> g;
        for (const auto& [la, c] : terms_) {
            if (!g)
                g = la.size();
            else if (*g != la.size())
                return std::nullopt;
        }
        return g;
    }

    friend SchubertExpr operator+(const SchubertExpr& a, const SchubertExpr& b) {
        a.require_same_box(b);
        SchubertExpr out = a;
        for (const auto& [la, c] : b.terms_) out.add(la, c);
        return out;
    }

    friend SchubertExpr operator-(const SchubertExpr& a, const SchubertExpr& b) {
        a.require_same_box(b);
        SchubertExpr out = a;
        for (const auto& [la, c] : b.terms_) out.add(la, -c);
        return out;
    }

    friend SchubertExpr operator*(const Int& c, const SchubertExpr& a) {
        SchubertExpr out(a.l_, a.n_);
        if (c != 0)
            for (const auto& [la, v] : a.terms_) out.terms_[la] = c * v;
        return out;
    }

    friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) {
        return a.l_ == b.l_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SchubertExpr& a, const SchubertExpr& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [la, c] : terms_) {
            Int a = abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono = "s" + la.str();
            out += (a == 1) ? mono : a.get_str() + "*" + mono;
        }
        return out;
    }

    void require_same_box(const SchubertExpr& other) const {
        if (l_ != other.l_ || n_ != other.n_)
            raise("BoxViolation", "Schubert expressions live in different Grassmannians");
    }

private:
    int l_, n_;
    TermMap terms_;
};

namespace detail {

// all partitions nu of size `total` inside the rows x cols box containing la
inline void partitions_over(const Partition& la, int total, int rows, int cols,
                            const std::function<void(const Partition&)>& emit) {
    std::vector<int> nu;
    std::function<void(int, int, int)> rec = [&](int row, int remaining, int maxpart) {
        if (remaining == 0) {
            Partition p(nu);
            if (p.contains(la)) emit(p);
            return;
        }
        if (row >= rows) return;
        int hi = std::min(maxpart, remaining);
        int lo = la.part(row);
        // remaining rows must absorb what is left
        for (int v = hi; v >= std::max(lo, 1); --v) {
            if (static_cast<long>(v) * (rows - row) < remaining) break;
            nu.push_back(v);
            rec(row + 1, remaining - v, v);
            nu.pop_back();
        }
    };
    rec(0, total, cols);
}

}  // namespace detail

// Littlewood-Richardson coefficient c^nu_{la,mu}: the number of LR skew
// tableaux of shape nu/la and content mu, counted by direct backtracking
// (rows weakly increase, columns strictly increase, reverse reading word is
// a lattice word).
inline Int lr_coefficient(const Partition& nu, const Partition& la, const Partition& mu) {
    if (!nu.contains(la)) return 0;
    if (nu.size() != la.size() + mu.size()) return 0;
    if (mu.size() == 0) return nu == la ? 1 : 0;

    const int rows = nu.length();
    const int values = mu.length();
    // fill order: rows top to bottom, each row right to left, so that the
    // entries are appended in reverse-reading-word order
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu.part(r) - 1; c >= la.part(r); --c) cells.push_back({r, c});

    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(nu.part(r), 0);  // 0 = empty / la region

    std::vector<int> count(values + 1, 0);
    Int total = 0;

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            total += 1;
            return;
        }
        auto [r, c] = cells[idx];
        int right = (c + 1 < nu.part(r)) ? fill[r][c + 1] : values + 1;  // filled earlier
        int above = (r > 0 && c < nu.part(r - 1) && c >= la.part(r - 1)) ? fill[r - 1][c] : 0;
        // cells above inside la impose no constraint (they read as "smaller")
        bool above_in_la = (r > 0 && c < la.part(r - 1));
        for (int v = 1; v <= values; ++v) {
            if (count[v] >= mu.part(v - 1)) continue;
            if (v > right) continue;                       // weakly increasing rows
            if (!above_in_la && r > 0 && c < nu.part(r - 1) && v <= above) continue;  // strict cols
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word prefix
            fill[r][c] = v;
            count[v]++;
            rec(idx + 1);
            count[v]--;
            fill[r][c] = 0;
        }
    };
    rec(0);
    return total;
}

// sigma_la * sigma_mu in G(l,n): LR expansion with classes outside the
// l x (n-l) box discarded
inline SchubertExpr lr_expand(const Partition& la, const Partition& mu, int l, int n) {
    if (l < 1 || l >= n) raise("BoxViolation", "need 1 <= l < n");
    const int cols = n - l;
    if (!la.fits(l, cols) || !mu.fits(l, cols))
        raise("BoxViolation", "partition does not fit the " + std::to_string(l) + "x" +
                                  std::to_string(cols) + " box");
    SchubertExpr out(l, n);
    detail::partitions_over(la, la.size() + mu.size(), l, cols, [&](const Partition& nu) {
        Int c = lr_coefficient(nu, la, mu);
        if (c != 0) out.add(nu, c);
    });
    return out;
}

inline SchubertExpr lr_mul(const SchubertExpr& a, const SchubertExpr& b) {
    a.require_same_box(b);
    SchubertExpr out(a.l(), a.n());
    for (const auto& [la, ca] : a.terms()) {
        for (const auto& [mu, cb] : b.terms()) {
            SchubertExpr prod = lr_expand(la, mu, a.l(), a.n());
            for (const auto& [nu, c] : prod.terms()) out.add(nu, ca * cb * c);
        }
    }
    return out;
}

// pairing against the point class sigma_{(n-l)^l}: 1 iff mu complements la
inline Int degree_pair(const Partition& la, const Partition& mu, int l, int n) {
    const int cols = n - l;
    if (!la.fits(l, cols) || !mu.fits(l, cols))
        raise("BoxViolation", "partition does not fit the box");
    if (la.size() + mu.size() != l * cols)
        raise("GradeMismatch", "codimensions do not add to dim G(l,n)");
    return la.complement(l, cols) == mu ? 1 : 0;
}

// Giambelli (dual Jacobi-Trudi): sigma_la = det(c_{la'_i - i + j}) as a
// polynomial in the Chern classes c1..cl of the dual tautological bundle
inline Poly giambelli(const Partition& la, int l) {
    Partition conj = la.conjugate();
    int r = conj.length();
    if (r == 0) return Poly::constant(1);
    auto entry = [&](int i, int j) -> Poly {  // 0-based
        int k = conj.part(i) - (i + 1) + (j + 1);
        if (k < 0 || k > l) return Poly();
        if (k == 0) return Poly::constant(1);
        return Poly::variable("c" + std::to_string(k));
    };
    // Laplace expansion along the first column; r is tiny here
    std::function<Poly(std::vector<int>)> det = [&](std::vector<int> rows_left) -> Poly {
        int j = r - static_cast<int>(rows_left.size());
        if (rows_left.empty()) return Poly::constant(1);
        Poly acc;
        for (size_t t = 0; t < rows_left.size(); ++t) {
            Poly e = entry(rows_left[t], j);
            if (e.is_zero()) continue;
            std::vector<int> rest;
            for (size_t s = 0; s < rows_left.size(); ++s)
                if (s != t) rest.push_back(rows_left[s]);
            Poly sub = det(rest);
            Poly contrib = e * sub;
            acc = (t % 2 == 0) ? acc + contrib : acc - contrib;
        }
        return acc;
    };
    std::vector<int> all;
    for (int i = 0; i < r; ++i) all.push_back(i);
    return det(all);
}

// Expand a polynomial in the tautological Chern generators into the Schubert
// basis of G(l,n). Variables c1..cl map to sigma_{1^k} (Chern classes of the
// dual tautological subbundle); variables q1..q_{n-l} map to the single-row
// classes sigma_k (Chern classes of the tautological quotient). Grades
// beyond the box truncate silently.
inline SchubertExpr chern_to_schubert(const Poly& p, int l, int n) {
    SchubertExpr out(l, n);
    const auto& vars = p.variables();
    std::vector<SchubertExpr> images;
    for (const auto& v : vars) {
        if (v.size() >= 2 && v[0] == 'c') {
            int k = std::stoi(v.substr(1));
            if (k < 1 || k > l) raise("InvalidGenerator", "no Chern class " + v + " on rank-" +
                                                              std::to_string(l) + " bundle");
            std::vector<int> col(k, 1);
            images.push_back(SchubertExpr::single(l, n, Partition(col)));
        } else if (v.size() >= 2 && v[0] == 'q') {
            int k = std::stoi(v.substr(1));
            if (k < 1 || k > n - l)
                raise("InvalidGenerator", "no Chern class " + v + " on rank-" +
                                              std::to_string(n - l) + " quotient");
            images.push_back(SchubertExpr::single(l, n, Partition({k})));
        } else {
            raise("InvalidGenerator", "unrecognized Chern generator " + v);
        }
    }
    for (const auto& [e, c] : p.terms()) {
        SchubertExpr term = SchubertExpr::unit(l, n);
        for (size_t i = 0; i < vars.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep) term = lr_mul(term, images[i]);
        for (const auto& [la, v] : term.terms()) out.add(la, c * v);
    }
    return out;
}

}  // namespace fourfold
