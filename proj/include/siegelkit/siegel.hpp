#pragma once

// Fourier coefficient tables of degree-2 Siegel cusp forms of full level.
// a(f, S) depends only on the SL2(Z)-class of S, so a table stores one exact
// rational per reduced form and answers every other S by reduction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegelkit/bqf.hpp"
#include "siegelkit/jacobi.hpp"
#include "siegelkit/qexp.hpp"

namespace siegelkit::siegel {

using bqf::QuadForm;
using Entries = std::map<QuadForm, Rational, bqf::CanonicalLess>;

/// Every reduced form with 0 < |disc| <= bound, in canonical (|disc|, a, b) order.
inline std::vector<QuadForm> reduced_forms_up_to(Int bound) {
    std::vector<QuadForm> out;
    for (Int d = 3; d <= bound; ++d) {
        if (!jacobi::on_grid(d)) continue;
        for (const auto& f : bqf::enumerate_reduced(-d)) out.push_back(f);
    }
    return out;
}

class SiegelTable {
public:
    /// Validates keys (reduced, within bound) and density (every reduced class present).
    SiegelTable(int weight, Int disc_bound, std::string provenance, Entries entries)
        : weight_(weight), bound_(disc_bound), provenance_(std::move(provenance)), entries_(std::move(entries)) {
        if (bound_ < 1) throw DomainError("SiegelTable: disc bound must be positive");
        if (provenance_.find('\n') != std::string::npos) throw DomainError("SiegelTable: provenance must be one line");
        for (const auto& [key, value] : entries_) {
            if (!bqf::is_reduced(key)) throw DomainError("SiegelTable: key " + bqf::to_string(key) + " is not reduced");
            if (-bqf::discriminant(key) > bound_) throw DomainError("SiegelTable: key " + bqf::to_string(key) + " exceeds bound");
        }
        const auto keys = reduced_forms_up_to(bound_);
        if (keys.size() != entries_.size()) throw DomainError("SiegelTable: table is not dense over reduced classes");
    }

    static SiegelTable zero(int weight, Int disc_bound, std::string provenance = "zero") {
        Entries e;
        for (const auto& f : reduced_forms_up_to(disc_bound)) e.emplace(f, Rational(0));
        return {weight, disc_bound, std::move(provenance), std::move(e)};
    }

    int weight() const noexcept { return weight_; }
    Int disc_bound() const noexcept { return bound_; }
    const std::string& provenance() const noexcept { return provenance_; }
    const Entries& entries() const noexcept { return entries_; }

    /// a(f, S) for any positive-definite S with |disc(S)| <= bound.
    const Rational& coeff(const QuadForm& s) const {
        if (!bqf::is_positive_definite(s)) throw DomainError("coeff: form " + bqf::to_string(s) + " is not positive definite");
        if (-bqf::discriminant(s) > bound_)
            throw BoundError("coeff: |disc| of " + bqf::to_string(s) + " exceeds table bound " + std::to_string(bound_));
        return entries_.at(bqf::reduce(s).form);
    }

    bool is_zero() const {
        for (const auto& [k, v] : entries_)
            if (v != 0) return false;
        return true;
    }

    /// Restriction to a smaller bound.
    SiegelTable restricted(Int bound) const {
        if (bound > bound_) throw BoundError("restricted: bound exceeds table bound");
        Entries e;
        for (const auto& [k, v] : entries_)
            if (-bqf::discriminant(k) <= bound) e.emplace(k, v);
        return {weight_, bound, provenance_, std::move(e)};
    }

    /// Same weight, bound and coefficients (provenance ignored).
    bool same_coefficients(const SiegelTable& o) const {
        return weight_ == o.weight_ && bound_ == o.bound_ && entries_ == o.entries_;
    }

    friend bool operator==(const SiegelTable&, const SiegelTable&) = default;

private:
    int weight_;
    Int bound_;
    std::string provenance_;
    Entries entries_;
};

/// Maass lift: a(F, (n, r, m)) = sum_{t | gcd(n, r, m)} t^(k-1) c((4nm - r^2) / t^2).
inline Rational lift_coefficient(const jacobi::JacobiForm& phi, const QuadForm& s) {
    const Int D = -bqf::discriminant(s);
    Rational acc = 0;
    for (Int t : divisors(bqf::content(s)))
        acc += ipow(t, static_cast<unsigned long>(phi.weight() - 1)) * phi.c(D / (t * t));
    return acc;
}

inline SiegelTable sk_lift(const jacobi::JacobiForm& phi, Int disc_bound) {
    if (phi.dmax() < disc_bound)
        throw BoundError("sk_lift: Jacobi form known to D = " + std::to_string(phi.dmax()) + ", need " + std::to_string(disc_bound));
    if (phi.c(0) != 0) throw DomainError("sk_lift: Jacobi form is not cuspidal");
    Entries e;
    for (const auto& f : reduced_forms_up_to(disc_bound)) e.emplace(f, lift_coefficient(phi, f));
    return {phi.weight(), disc_bound, "saito-kurokawa lift, weight " + std::to_string(phi.weight()), std::move(e)};
}

/// Entrywise t1 + lambda t2 on the common bound.
inline SiegelTable scale_add(const SiegelTable& t1, const SiegelTable& t2, const Rational& lambda) {
    if (t1.weight() != t2.weight()) throw DomainError("scale_add: weight mismatch");
    const Int bound = std::min(t1.disc_bound(), t2.disc_bound());
    Entries e;
    for (const auto& f : reduced_forms_up_to(bound)) e.emplace(f, t1.entries().at(f) + lambda * t2.entries().at(f));
    return {t1.weight(), bound, "(" + t1.provenance() + ") + " + to_string(lambda) + " * (" + t2.provenance() + ")", std::move(e)};
}

inline SiegelTable scaled(const SiegelTable& t, const Rational& lambda) {
    return scale_add(SiegelTable::zero(t.weight(), t.disc_bound(), t.provenance()), t, lambda);
}

/// a(T(p) F, (n, r, m)) =
///     a(pn, pr, pm) + p^(2k-3) a(n/p, r/p, m/p)
///   + p^(k-2) [ a(pn, r, m/p) + sum_{u mod p} a((n + r u + m u^2)/p, r + 2 m u, p m) ],
/// where terms with non-integral entries are dropped.
inline Rational hecke_tp_coefficient(const SiegelTable& t, Int p, const QuadForm& s) {
    const Int k = t.weight();
    const auto [n, r, m] = s;
    Rational acc = t.coeff({p * n, p * r, p * m});
    if (n % p == 0 && r % p == 0 && m % p == 0)
        acc += ipow(p, static_cast<unsigned long>(2 * k - 3)) * t.coeff({n / p, r / p, m / p});
    Rational mid = 0;
    if (m % p == 0) mid += t.coeff({p * n, r, m / p});
    for (Int u = 0; u < p; ++u) {
        const Int top = n + r * u + m * u * u;
        if (top % p == 0) mid += t.coeff({top / p, r + 2 * m * u, p * m});
    }
    acc += ipow(p, static_cast<unsigned long>(k - 2)) * mid;
    return acc;
}

/// Coefficient table of T(p) f up to bound / p^2.
inline SiegelTable hecke_tp(const SiegelTable& t, Int p) {
    if (!is_prime(p)) throw DomainError("hecke_tp: p must be prime");
    const Int bound = t.disc_bound() / (p * p);
    if (bound < 3) throw BoundError("hecke_tp: bound " + std::to_string(t.disc_bound()) + " too small for p = " + std::to_string(p));
    Entries e;
    for (const auto& f : reduced_forms_up_to(bound)) e.emplace(f, hecke_tp_coefficient(t, p, f));
    return {t.weight(), bound, "T(" + std::to_string(p) + ") of " + t.provenance(), std::move(e)};
}

struct EigenvalueRecord {
    Int p;
    Rational lambda;
    Int verified_keys;
};

/// lambda with T(p) f = lambda f on every reduced class up to bound / p^2.
inline EigenvalueRecord eigenvalue_p(const SiegelTable& t, Int p) {
    const SiegelTable image = hecke_tp(t, p);
    const SiegelTable base = t.restricted(image.disc_bound());
    std::optional<Rational> lambda;
    for (const auto& [f, v] : base.entries())
        if (v != 0) {
            lambda = image.entries().at(f) / v;
            break;
        }
    if (!lambda) throw BoundError("eigenvalue_p: insufficient data, table vanishes up to bound " + std::to_string(image.disc_bound()));
    Int checked = 0;
    for (const auto& [f, v] : base.entries()) {
        if (image.entries().at(f) != *lambda * v)
            throw DomainError("eigenvalue_p: not an eigenform (proportionality fails at " + bqf::to_string(f) + ")");
        ++checked;
    }
    return {p, *lambda, checked};
}

/// lambda_p = a_p(g) + p^(k-1) + p^(k-2) for the lift of the weight 2k-2 eigenform g.
inline Rational sk_eigenvalue_p(const qexp::QSeries& g, int k, Int p) {
    if (g.weight() != 2 * k - 2) throw DomainError("sk_eigenvalue_p: g must have weight 2k-2");
    return qexp::hecke_ap(g, p) + ipow(p, static_cast<unsigned long>(k - 1)) + ipow(p, static_cast<unsigned long>(k - 2));
}

}  // namespace siegelkit::siegel
