#pragma once

// Exact arithmetic in Z[zeta_m] and Q(zeta_m).
//
// An element is stored by its coordinates in the power basis
// 1, z, ..., z^(phi(m)-1) where z = exp(2 pi i / m); products are reduced
// modulo the m-th cyclotomic polynomial, which is monic with integer
// coefficients, so the representation is canonical and zero-testing is a
// coefficient comparison.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "siegelkit/arith.hpp"

namespace siegelkit {

/// Static data for one cyclotomic order m.
struct CyclotomicField {
    Int order = 1;
    std::size_t degree = 1;
    std::vector<Int> modulus;                   // Phi_m, low to high, monic
    std::vector<std::vector<Int>> power_basis;  // z^j reduced, j in [0, m)
};

namespace detail {

// Exact quotient of integer polynomials where the divisor is monic.
inline std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Int> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        Int t = num[i];
        quot[i - dn] = t;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

inline std::vector<Int> cyclotomic_polynomial(Int m) {
    std::vector<Int> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (Int d : divisors(m))
        if (d < m) poly = divide_monic(poly, cyclotomic_polynomial(d));
    return poly;
}

inline std::shared_ptr<const CyclotomicField> build_field(Int m) {
    auto field = std::make_shared<CyclotomicField>();
    field->order = m;
    field->modulus = cyclotomic_polynomial(m);
    field->degree = field->modulus.size() - 1;
    const std::size_t deg = field->degree;
    std::vector<Int> cur(deg, 0);
    cur[0] = 1;
    for (Int j = 0; j < m; ++j) {
        field->power_basis.push_back(cur);
        // multiply by z: shift then fold the top coefficient back
        Int top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * field->modulus[i];
    }
    return field;
}

}  // namespace detail

/// Shared, lazily built field data; safe to call concurrently.
inline std::shared_ptr<const CyclotomicField> cyclotomic_field(Int m) {
    if (m < 1) throw DomainError("cyclotomic order must be positive");
    static std::mutex lock;
    static std::map<Int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, detail::build_field(m)).first;
    return it->second;
}

/// Element of Z[zeta_m] (T = Integer) or Q(zeta_m) (T = Rational).
template <class T>
class Cyclotomic {
public:
    explicit Cyclotomic(Int m = 1) : field_(cyclotomic_field(m)), coeffs_(field_->degree, T(0)) {}

    static Cyclotomic scalar(Int m, const T& value) {
        Cyclotomic x(m);
        x.coeffs_[0] = value;
        return x;
    }

    /// z^j for any integer j.
    static Cyclotomic zeta_power(Int m, Int j) {
        Cyclotomic x(m);
        const auto& row = x.field_->power_basis[static_cast<std::size_t>(mod(j, m))];
        for (std::size_t i = 0; i < row.size(); ++i) x.coeffs_[i] = T(row[i]);
        return x;
    }

    /// sum_j weights[j] z^j for j in [0, m).
    template <class W>
    static Cyclotomic from_power_weights(Int m, const std::vector<W>& weights) {
        Cyclotomic x(m);
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (weights[j] == 0) continue;
            const auto& row = x.field_->power_basis[j % static_cast<std::size_t>(m)];
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i] != 0) x.coeffs_[i] += T(weights[j]) * T(row[i]);
        }
        return x;
    }

    Int order() const noexcept { return field_->order; }
    std::size_t degree() const noexcept { return field_->degree; }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }
    const T& operator[](std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// True when the element lies in the base ring (only the constant coordinate is set).
    bool is_scalar() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    const T& constant() const { return coeffs_[0]; }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const T& s) { return a *= s; }
    friend Cyclotomic operator*(const T& s, Cyclotomic a) { return a *= s; }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same(b);
        const std::size_t deg = a.degree();
        std::vector<T> prod(2 * deg - 1, T(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        const auto& phi = a.field_->modulus;
        for (std::size_t i = prod.size(); i-- > deg;) {
            if (prod[i] == 0) continue;
            T top = prod[i];
            for (std::size_t j = 0; j < deg; ++j)
                if (phi[j] != 0) prod[i - deg + j] -= top * T(phi[j]);
        }
        Cyclotomic r(a.order());
        for (std::size_t i = 0; i < deg; ++i) r.coeffs_[i] = std::move(prod[i]);
        return r;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Image under complex conjugation z -> z^-1.
    Cyclotomic conj() const {
        std::vector<T> weights(static_cast<std::size_t>(order()), T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            weights[static_cast<std::size_t>(mod(-static_cast<Int>(i), order()))] += coeffs_[i];
        return from_power_weights(order(), weights);
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }

    /// Power-basis coordinates separated by single spaces.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ' ';
            out += siegelkit::to_string(coeffs_[i]);
        }
        return out;
    }

private:
    void check_same(const Cyclotomic& o) const {
        if (order() != o.order()) throw DomainError("cyclotomic order mismatch");
    }

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<T> coeffs_;
};

using CycloInteger = Cyclotomic<Integer>;
using CycloRational = Cyclotomic<Rational>;

}  // namespace siegelkit
