#pragma once

// Index-one Jacobi forms stored on the discriminant grid: the coefficient of
// q^n zeta^r depends only on D = 4n - r^2, so a form is the map D -> c(D)
// for D = 0, 3, 4, 7, 8, ... up to a bound.

#include <vector>

#include "siegelkit/linalg.hpp"
#include "siegelkit/qexp.hpp"

namespace siegelkit::jacobi {

inline bool on_grid(Int D) { return D >= 0 && (mod(D, 4) == 0 || mod(D, 4) == 3); }

class JacobiForm {
public:
    JacobiForm(int weight, Int dmax) : weight_(weight), c_(static_cast<std::size_t>(dmax) + 1, Rational(0)) {
        if (dmax < 0) throw DomainError("JacobiForm: negative bound");
    }

    int weight() const noexcept { return weight_; }
    Int dmax() const noexcept { return static_cast<Int>(c_.size()) - 1; }

    /// c(D); BoundError past dmax, DomainError for D = 1, 2 mod 4.
    const Rational& c(Int D) const {
        check(D);
        return c_[static_cast<std::size_t>(D)];
    }
    void set(Int D, Rational v) {
        check(D);
        c_[static_cast<std::size_t>(D)] = std::move(v);
    }

    /// Coefficient of q^n zeta^r.
    const Rational& coefficient(Int n, Int r) const { return c(4 * n - r * r); }

    /// Grid values c(0), c(3), c(4), ... in increasing D.
    std::vector<Rational> grid_values() const {
        std::vector<Rational> out;
        for (Int D = 0; D <= dmax(); ++D)
            if (on_grid(D)) out.push_back(c_[static_cast<std::size_t>(D)]);
        return out;
    }

    JacobiForm truncated(Int dmax) const {
        if (dmax > this->dmax()) throw BoundError("JacobiForm: cannot extend truncation");
        JacobiForm out(weight_, dmax);
        for (Int D = 0; D <= dmax; ++D) out.c_[static_cast<std::size_t>(D)] = c_[static_cast<std::size_t>(D)];
        return out;
    }

    friend bool operator==(const JacobiForm&, const JacobiForm&) = default;

private:
    void check(Int D) const {
        if (D > dmax()) throw BoundError("Jacobi coefficient D = " + std::to_string(D) + " beyond bound " + std::to_string(dmax()));
        if (!on_grid(D)) throw DomainError("Jacobi coefficient index D = " + std::to_string(D) + " is not 0 or 3 mod 4");
    }

    int weight_;
    std::vector<Rational> c_;
};

/// E_{k,1} for k in {4, 6}: c(D) = H(k-1, D) / H(k-1, 0).
inline JacobiForm jacobi_eisenstein(int k, Int dmax) {
    if (k != 4 && k != 6) throw DomainError("jacobi_eisenstein: weight must be 4 or 6");
    const qexp::CohenH H(k - 1);
    const Rational h0 = H(0);
    JacobiForm out(k, dmax);
    for (Int D = 0; D <= dmax; ++D)
        if (on_grid(D)) out.set(D, H(D) / h0);
    return out;
}

/// (g phi)(D) = sum_{j >= 0} g_j phi(D - 4j). Needs g to 4 * nmax_g >= dmax_phi - 3.
inline JacobiForm times_qseries(const JacobiForm& phi, const qexp::QSeries& g) {
    if (g.weight() < 0) throw DomainError("times_qseries: negative weight");
    if (4 * (g.nmax() + 1) <= phi.dmax())
        throw BoundError("times_qseries: q-series truncation " + std::to_string(g.nmax()) + " too short for D <= " + std::to_string(phi.dmax()));
    JacobiForm out(phi.weight() + g.weight(), phi.dmax());
    for (Int D = 0; D <= phi.dmax(); ++D) {
        if (!on_grid(D)) continue;
        Rational acc = 0;
        for (Int j = 0; 4 * j <= D; ++j)
            if (g[j] != 0) acc += g[j] * phi.c(D - 4 * j);
        out.set(D, std::move(acc));
    }
    return out;
}

inline JacobiForm add_scaled(const JacobiForm& x, const JacobiForm& y, const Rational& lambda) {
    if (x.weight() != y.weight()) throw DomainError("Jacobi forms of different weight");
    JacobiForm out(x.weight(), std::min(x.dmax(), y.dmax()));
    for (Int D = 0; D <= out.dmax(); ++D)
        if (on_grid(D)) out.set(D, x.c(D) + lambda * y.c(D));
    return out;
}

/// Monomial basis E4^a E6^b of M_w, a descending.
inline std::vector<qexp::QSeries> modular_monomials(int w, Int nmax) {
    std::vector<qexp::QSeries> out;
    if (w < 0 || w % 2) return out;
    const auto e4 = qexp::eisenstein(4, nmax);
    const auto e6 = qexp::eisenstein(6, nmax);
    for (int a = w / 4; a >= 0; --a) {
        if ((w - 4 * a) % 6) continue;
        qexp::QSeries m = qexp::QSeries::constant(1, nmax);
        for (int i = 0; i < a; ++i) m = qexp::multiply(m, e4);
        for (int i = 0; i < (w - 4 * a) / 6; ++i) m = qexp::multiply(m, e6);
        out.push_back(std::move(m));
    }
    return out;
}

/// Number of grid indices D <= dmax.
inline Int grid_size(Int dmax) {
    Int n = 0;
    for (Int D = 0; D <= dmax; ++D) n += on_grid(D);
    return n;
}

/// Basis of the cusp forms in J_{k,1} = M_{k-4} E_{4,1} + M_{k-6} E_{6,1},
/// in reduced echelon form on the D-grid (each form's first nonzero c(D) is 1).
inline std::vector<JacobiForm> cusp_basis(int k, Int dmax) {
    if (k < 4 || k % 2) throw DomainError("cusp_basis: weight must be even and at least 4");
    const Int nmax = dmax / 4 + 1;
    std::vector<JacobiForm> spanning;
    if (k >= 4) {
        const auto e41 = jacobi_eisenstein(4, dmax);
        for (const auto& m : modular_monomials(k - 4, nmax)) spanning.push_back(times_qseries(e41, m));
    }
    if (k >= 6) {
        const auto e61 = jacobi_eisenstein(6, dmax);
        for (const auto& m : modular_monomials(k - 6, nmax)) spanning.push_back(times_qseries(e61, m));
    }
    const Int s = static_cast<Int>(spanning.size());
    if (grid_size(dmax) < s)
        throw BoundError("cusp_basis: dmax " + std::to_string(dmax) + " gives fewer coefficients than the " + std::to_string(s) + " spanning forms");

    linalg::Matrix<Rational> rows;
    for (const auto& phi : spanning) rows.push_back(phi.grid_values());

    // the spanning set must already be independent on D <= 4 (s + 4)
    const Int window = std::min(grid_size(dmax), grid_size(4 * (s + 4)));
    linalg::Matrix<Rational> head;
    for (const auto& r : rows) head.emplace_back(r.begin(), r.begin() + window);
    if (static_cast<Int>(linalg::rank(head)) != s)
        throw BoundError("cusp_basis: spanning set is rank-deficient on the available coefficients");

    const auto ech = linalg::rref(rows);
    std::vector<JacobiForm> basis;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
        if (ech.pivots[i] == 0) continue;  // the only row with c(0) != 0
        JacobiForm phi(k, dmax);
        std::size_t col = 0;
        for (Int D = 0; D <= dmax; ++D)
            if (on_grid(D)) phi.set(D, ech.rows[i][col++]);
        basis.push_back(std::move(phi));
    }
    if (static_cast<int>(basis.size()) != qexp::dim_cusp_forms(2 * k - 2))
        throw std::logic_error("cusp_basis: dimension disagrees with dim S_{2k-2}");
    return basis;
}

}  // namespace siegelkit::jacobi
