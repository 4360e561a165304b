#pragma once

// Exact dense linear algebra over Z and Q.
//
// Forward elimination is fraction-free (Bareiss): every intermediate entry is
// an integer minor of the input, so entries stay integral and the division
// at each step is exact. Rational matrices are scaled row-wise to integers
// first; scaling rows does not change rank or row space.

#include <utility>
#include <vector>

#include "siegelkit/arith.hpp"

namespace siegelkit::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct Echelon {
    Matrix<Integer> rows;             // row echelon form, rows past `rank` are zero
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free row echelon form.
inline Echelon bareiss_echelon(Matrix<Integer> a) {
    Echelon out;
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows ? a[0].size() : 0;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = row + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer v = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        out.pivots.push_back(col);
        ++row;
    }
    out.rows = std::move(a);
    return out;
}

/// Multiplies each row by the lcm of its denominators.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& a) {
    Matrix<Integer> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Integer l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& x : row) r.emplace_back(x.get_num() * (l / x.get_den()));
        out.push_back(std::move(r));
    }
    return out;
}

inline std::size_t rank(const Matrix<Rational>& a) { return bareiss_echelon(clear_denominators(a)).rank(); }

struct ReducedEchelon {
    Matrix<Rational> rows;  // nonzero rows only, each with leading entry 1
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form: Bareiss forward pass, then exact back substitution.
inline ReducedEchelon rref(const Matrix<Rational>& a) {
    Echelon e = bareiss_echelon(clear_denominators(a));
    ReducedEchelon out;
    out.pivots = e.pivots;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        const Integer lead = e.rows[i][e.pivots[i]];
        std::vector<Rational> r;
        r.reserve(e.rows[i].size());
        for (const auto& x : e.rows[i]) {
            Rational q{x, lead};
            q.canonicalize();
            r.push_back(std::move(q));
        }
        out.rows.push_back(std::move(r));
    }
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        const std::size_t pc = out.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = out.rows[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < out.rows[k].size(); ++j) out.rows[k][j] -= f * out.rows[i][j];
        }
    }
    return out;
}

}  // namespace siegelkit::linalg
