#pragma once

// Exact q-expansions of level-one modular forms, Bernoulli numbers
// (ordinary and twisted by quadratic characters) and Cohen's H(r, N).

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "siegelkit/arith.hpp"
#include "siegelkit/bqf.hpp"

namespace siegelkit::qexp {

/// Truncated q-expansion c(0) + c(1) q + ... + c(nmax) q^nmax.
class QSeries {
public:
    QSeries(int weight, std::vector<Rational> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("QSeries needs at least one coefficient");
    }

    static QSeries constant(const Rational& value, Int nmax, int weight = 0) {
        std::vector<Rational> c(static_cast<std::size_t>(nmax) + 1, Rational(0));
        c[0] = value;
        return {weight, std::move(c)};
    }

    int weight() const noexcept { return weight_; }
    Int nmax() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of q^n; throws BoundError past the truncation.
    const Rational& operator[](Int n) const {
        if (n < 0 || n > nmax()) throw BoundError("q-expansion coefficient " + std::to_string(n) + " beyond truncation " + std::to_string(nmax()));
        return coeffs_[static_cast<std::size_t>(n)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    int weight_;
    std::vector<Rational> coeffs_;
};

inline QSeries add(const QSeries& f, const QSeries& g) {
    if (f.weight() != g.weight()) throw DomainError("add: weight mismatch");
    const Int n = std::min(f.nmax(), g.nmax());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (Int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f[i] + g[i];
    return {f.weight(), std::move(c)};
}

inline QSeries scale(const QSeries& f, const Rational& lambda) {
    std::vector<Rational> c = f.coefficients();
    for (auto& x : c) x *= lambda;
    return {f.weight(), std::move(c)};
}

inline QSeries multiply(const QSeries& f, const QSeries& g) {
    const Int n = std::min(f.nmax(), g.nmax());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (Int i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (Int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
    return {f.weight() + g.weight(), std::move(c)};
}

/// Bernoulli number B_n with B_1 = -1/2.
inline Rational bernoulli(int n) {
    static std::mutex lock;
    static std::vector<Rational> table{Rational(1)};
    if (n < 0) throw DomainError("bernoulli: negative index");
    std::lock_guard guard(lock);
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        Rational sum = 0;
        Integer binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            sum += binom * table[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        table.push_back(-sum / (m + 1));
    }
    return table[static_cast<std::size_t>(n)];
}

/// Bernoulli polynomial B_n(x).
inline Rational bernoulli_polynomial(int n, const Rational& x) {
    Rational acc = 0;
    Integer binom = 1;
    for (int j = 0; j <= n; ++j) {
        Rational xp = 1;
        for (int i = 0; i < n - j; ++i) xp *= x;
        acc += binom * bernoulli(j) * xp;
        binom = binom * (n - j) / (j + 1);
    }
    return acc;
}

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n.
inline QSeries eisenstein(int k, Int nmax) {
    if (k < 4 || k % 2 != 0) throw DomainError("eisenstein: weight must be even and at least 4");
    const Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> c(static_cast<std::size_t>(nmax) + 1);
    c[0] = 1;
    for (Int n = 1; n <= nmax; ++n) c[static_cast<std::size_t>(n)] = factor * divisor_sigma(static_cast<unsigned long>(k - 1), n);
    return {k, std::move(c)};
}

/// Delta = (E4^3 - E6^2) / 1728.
inline QSeries delta(Int nmax) {
    if (nmax < 1) throw DomainError("delta: nmax must be at least 1");
    const QSeries e4 = eisenstein(4, nmax);
    const QSeries e6 = eisenstein(6, nmax);
    const QSeries e4cubed = multiply(multiply(e4, e4), e4);
    const QSeries e6sq = multiply(e6, e6);
    return scale(add(e4cubed, scale(e6sq, -1)), make_rational(1, 1728));
}

inline int dim_modular_forms(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}

inline int dim_cusp_forms(int k) {
    const int d = dim_modular_forms(k);
    return d > 0 ? d - 1 : 0;
}

/// The normalized cusp eigenform Delta * E_{k-12} of a one-dimensional S_k.
inline QSeries cusp_eigenform(int k, Int nmax) {
    if (dim_cusp_forms(k) != 1) throw DomainError("cusp_eigenform: dim S_" + std::to_string(k) + " is not 1");
    const QSeries d = delta(nmax);
    if (k == 12) return d;
    return multiply(d, eisenstein(k - 12, nmax));
}

/// Returns c(p) of a normalized eigenform after checking
/// c(p) c(n) = c(pn) + p^(k-1) c(n/p) for every pn <= nmax.
inline Rational hecke_ap(const QSeries& f, Int p) {
    if (!is_prime(p)) throw DomainError("hecke_ap: p must be prime");
    if (f.nmax() < p) throw BoundError("hecke_ap: truncation below p");
    if (f[1] != 1) throw DomainError("hecke_ap: form is not normalized");
    const Rational ap = f[p];
    const Integer pk = ipow(p, static_cast<unsigned long>(f.weight() - 1));
    for (Int n = 1; p * n <= f.nmax(); ++n) {
        Rational rhs = f[p * n];
        if (n % p == 0) rhs += pk * f[n / p];
        if (ap * f[n] != rhs)
            throw DomainError("hecke_ap: eigenform relation fails at n = " + std::to_string(n) + ", p = " + std::to_string(p));
    }
    return ap;
}

/// Fundamental discriminant (or 1) D and f > 0 with X = D f^2, for X = 0, 1 mod 4, X != 0.
inline std::pair<Int, Int> fundamental_decomposition(Int X) {
    if (X == 0 || mod(X, 4) == 2 || mod(X, 4) == 3) throw DomainError("fundamental_decomposition: not a discriminant");
    Int core = X < 0 ? -1 : 1;
    Int g = 1;
    for (auto [p, e] : factorize(X)) {
        if (e % 2) core *= p;
        for (int i = 0; i < e / 2; ++i) g *= p;
    }
    if (mod(core, 4) == 1) return {core, g};
    return {4 * core, g / 2};
}

/// Generalized Bernoulli number B_{r, chi_D} = |D|^(r-1) sum_{a=1}^{|D|} chi_D(a) B_r(a / |D|).
/// D = 1 gives the trivial character (so B_{1,chi_1} = +1/2).
inline Rational gen_bernoulli(int r, Int D) {
    if (r < 1) throw DomainError("gen_bernoulli: r must be positive");
    if (D != 1 && D != fundamental_decomposition(D).first)
        throw DomainError("gen_bernoulli: D must be a fundamental discriminant");
    const Int f = abs_int(D);
    Rational sum = 0;
    for (Int a = 1; a <= f; ++a) {
        const int chi = D == 1 ? 1 : bqf::kronecker(D, a);
        if (chi == 0) continue;
        const Rational val = bernoulli_polynomial(r, make_rational(a, f));
        if (chi > 0) sum += val;
        else sum -= val;
    }
    return sum * ipow(f, static_cast<unsigned long>(r - 1));
}

/// L(1 - r, chi_D) = -B_{r, chi_D} / r.
inline Rational l_value_at_one_minus(int r, Int D) { return -gen_bernoulli(r, D) / r; }

/// Cohen's H(r, N) with a reader-writer memo; concurrent readers see complete entries only.
class CohenH {
public:
    explicit CohenH(int r) : r_(r) {
        if (r < 2) throw DomainError("CohenH: r must be at least 2");
    }

    int r() const noexcept { return r_; }

    Rational operator()(Int N) const {
        {
            std::shared_lock read(lock_);
            if (auto it = cache_.find(N); it != cache_.end()) return it->second;
        }
        Rational v = compute(N);
        std::unique_lock write(lock_);
        cache_.emplace(N, v);
        return v;
    }

private:
    Rational compute(Int N) const {
        if (N < 0) return 0;
        if (N == 0) return -bernoulli(2 * r_) / (2 * r_);
        const Int X = r_ % 2 ? -N : N;
        if (mod(X, 4) == 2 || mod(X, 4) == 3) return 0;
        const auto [D, f] = fundamental_decomposition(X);
        Rational sum = 0;
        for (Int e : divisors(f)) {
            const int mu = mobius(e);
            if (mu == 0) continue;
            const int chi = D == 1 ? 1 : bqf::kronecker(D, e);
            if (chi == 0) continue;
            sum += Rational(mu * chi) * ipow(e, static_cast<unsigned long>(r_ - 1)) *
                   divisor_sigma(static_cast<unsigned long>(2 * r_ - 1), f / e);
        }
        return l_value_at_one_minus(r_, D) * sum;
    }

    int r_;
    mutable std::shared_mutex lock_;
    mutable std::map<Int, Rational> cache_;
};

inline Rational cohen_h(int r, Int N) { return CohenH(r)(N); }

}  // namespace siegelkit::qexp
