#pragma once

#include <string>
#include <vector>

#include "fourfold/error.hpp"
#include "fourfold/numeric.hpp"

namespace fourfold {

// The quadratic function attached to a clean embedding, in coordinates for
// a basis e_1..e_m of N^2(V):
//   Q(x) = x^T gram x - linear . x
// with gram[i][j] = deg([X] e_i e_j) and linear[k] = deg([X] e_k c2(T_X)).
struct QForm {
    std::vector<std::string> basis;
    std::vector<std::vector<Int>> gram;
    std::vector<Int> linear;

    int dim() const { return static_cast<int>(linear.size()); }

    void validate() const {
        size_t m = linear.size();
        if (gram.size() != m) raise("DimensionMismatch", "gram and linear sizes differ");
        for (const auto& row : gram)
            if (row.size() != m) raise("DimensionMismatch", "gram is not square");
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (gram[i][j] != gram[j][i]) raise("AsymmetricGram", "gram must be symmetric");
        if (!basis.empty() && basis.size() != m)
            raise("DimensionMismatch", "basis labels do not match the dimension");
    }

    // printed form matching the coefficient convention A_ii x_i^2 + 2 A_ij x_i x_j - b_k x_k
    std::string render() const {
        const int m = dim();
        std::string out;
        auto append = [&](const Int& coeff, const std::string& mono) {
            if (coeff == 0) return;
            Int a = abs(coeff);
            if (out.empty()) {
                if (coeff < 0) out += "-";
            } else {
                out += coeff < 0 ? " - " : " + ";
            }
            out += (a == 1 && !mono.empty()) ? mono : a.get_str() + (mono.empty() ? "" : "*" + mono);
        };
        auto xi = [&](int i) { return "x" + std::to_string(i + 1); };
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                Int c = i == j ? gram[i][i] : 2 * gram[i][j];
                append(c, i == j ? xi(i) + "^2" : xi(i) + "*" + xi(j));
            }
        for (int k = 0; k < m; ++k) append(-linear[k], xi(k));
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const QForm& a, const QForm& b) {
        return a.basis == b.basis && a.gram == b.gram && a.linear == b.linear;
    }
};

inline Int q_eval(const QForm& q, const std::vector<Int>& x) {
    const int m = q.dim();
    if (static_cast<int>(x.size()) != m)
        raise("DimensionMismatch", "evaluation point has wrong length");
    Int acc = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) acc += q.gram[i][j] * x[i] * x[j];
    for (int k = 0; k < m; ++k) acc -= q.linear[k] * x[k];
    return acc;
}

namespace detail {

inline Int int_det(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    // Laplace along the first row; matrices here are tiny
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * int_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

inline Int leading_minor(const QForm& q, int k) {
    std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = q.gram[i][j];
    return int_det(m);
}

}  // namespace detail

// Sylvester criterion on the quadratic part, decided in exact arithmetic.
// The witness carries every leading principal minor computed; on failure
// `failing` is the 1-based index of the first non-positive minor.
struct Decency {
    bool decent = false;
    std::vector<Int> leading_minors;
    int failing = 0;  // 0 when decent

    std::string describe() const {
        if (decent) {
            std::string s = "positive definite; leading principal minors";
            for (const auto& m : leading_minors) s += " " + m.get_str();
            return s;
        }
        return "not positive definite; leading principal minor " + std::to_string(failing) +
               " is " + leading_minors.back().get_str();
    }
};

inline Decency decide_decency(const QForm& q) {
    q.validate();
    Decency d;
    for (int k = 1; k <= q.dim(); ++k) {
        Int minor = detail::leading_minor(q, k);
        d.leading_minors.push_back(minor);
        if (minor <= 0) {
            d.failing = k;
            d.decent = false;
            return d;
        }
    }
    d.decent = true;
    return d;
}

struct Minimum {
    std::vector<Rat> vertex;
    Rat value;
};

// exact vertex 2A v = b and minimum value -1/2 b.v of a positive definite form
inline Minimum q_minimum(const QForm& q) {
    if (!decide_decency(q).decent)
        raise("NotPositiveDefinite", "minimum needs a positive definite quadratic part");
    const int m = q.dim();
    // Gaussian elimination over the rationals on [2A | b]
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = Rat(2 * q.gram[i][j]);
        a[i][m] = Rat(q.linear[i]);
    }
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) raise("NotPositiveDefinite", "singular quadratic part");
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    Minimum out;
    out.vertex.resize(m);
    for (int i = 0; i < m; ++i) {
        out.vertex[i] = a[i][m] / a[i][i];
        out.vertex[i].canonicalize();
    }
    Rat half_bv = 0;
    for (int i = 0; i < m; ++i) half_bv += Rat(q.linear[i]) * out.vertex[i];
    out.value = -half_bv / 2;
    out.value.canonicalize();
    return out;
}

// Bordered-determinant discriminant for two-variable forms, normalized with
// the -A22 prefactor: -A22 * det [[A, -b/2], [-b^T/2, -s]] = scale*(s + shift)
// with scale = A22 * det(A) and shift = -min value.
inline std::pair<Int, Rat> lawrence_discriminant(const QForm& q) {
    if (q.dim() != 2) raise("NotTwoVariables", "the discriminant is defined for m = 2");
    Minimum m = q_minimum(q);  // raises NotPositiveDefinite when needed
    Int det_a = detail::leading_minor(q, 2);
    Int scale = q.gram[1][1] * det_a;
    Rat shift = -m.value;
    shift.canonicalize();
    return {scale, shift};
}

}  // namespace fourfold
