#pragma once

// Bessel period sums over class groups, the fundamental-discriminant
// nonvanishing scan, normalized ratio reports and the separation step that
// kills the period of one eigenform by subtracting a multiple of another.

#include <optional>
#include <vector>

#include "siegelkit/classgroup.hpp"
#include "siegelkit/siegel.hpp"

namespace siegelkit::periods {

using bqf::ClassCharacter;
using bqf::ClassGroup;
using bqf::QuadForm;
using siegel::SiegelTable;

/// Element of Q(zeta_m); m = 1 for the trivial character.
using PeriodValue = CycloRational;

namespace detail {

inline std::shared_ptr<const ClassGroup> checked_group(const SiegelTable& t, Int d) {
    if (d < 1 || !bqf::is_fundamental(-d)) throw DomainError("period: -" + std::to_string(d) + " is not a fundamental discriminant");
    if (d > t.disc_bound()) throw BoundError("period: d = " + std::to_string(d) + " exceeds table bound " + std::to_string(t.disc_bound()));
    return bqf::class_group(-d);
}

}  // namespace detail

/// R(f, K) = sum over classes c of a(f, c).
inline PeriodValue bessel_period(const SiegelTable& t, Int d) {
    const auto G = detail::checked_group(t, d);
    Rational sum = 0;
    for (const auto& f : G->reps) sum += t.coeff(f);
    return PeriodValue::scalar(1, sum);
}

/// R(f, K, Lambda) = sum over classes c of a(f, c) Lambda^{-1}(c).
inline PeriodValue bessel_period_chi(const SiegelTable& t, Int d, const ClassCharacter& chi) {
    const auto G = detail::checked_group(t, d);
    if (chi.group().D != G->D) throw DomainError("period: character belongs to discriminant " + std::to_string(chi.group().D));
    std::vector<Rational> weights(static_cast<std::size_t>(chi.order()), Rational(0));
    for (std::size_t i = 0; i < G->reps.size(); ++i)
        weights[static_cast<std::size_t>(mod(-chi.exponents()[i], chi.order()))] += t.coeff(G->reps[i]);
    return PeriodValue::from_power_weights(chi.order(), weights);
}

/// |R|^2 = R * conj(R); throws unless the product is rational.
inline Rational norm_squared(const PeriodValue& r) {
    const PeriodValue n = r * r.conj();
    if (!n.is_scalar()) throw std::logic_error("norm_squared: R * conj(R) is not rational");
    return n.constant();
}

struct ScanHit {
    Int d;
    QuadForm witness;
    Rational value;
};

/// Smallest d with -d fundamental and a(f, S) != 0 for some reduced S of
/// discriminant -d; nullopt when the table bound is exhausted.
inline std::optional<ScanHit> fundamental_scan(const SiegelTable& t) {
    for (Int d = 3; d <= t.disc_bound(); ++d) {
        if (!bqf::is_fundamental(-d)) continue;
        for (const auto& f : bqf::enumerate_reduced(-d)) {
            const Rational& v = t.coeff(f);
            if (v != 0) return ScanHit{d, f, v};
        }
    }
    return std::nullopt;
}

/// First character, in canonical order, whose twisted period is nonzero.
inline ClassCharacter choose_character(const SiegelTable& t, Int d) {
    const auto G = detail::checked_group(t, d);
    bool any = false;
    for (const auto& f : G->reps) any = any || t.coeff(f) != 0;
    if (!any) throw DomainError("choose_character: every class coefficient vanishes at d = " + std::to_string(d));
    for (const auto& chi : bqf::characters(G))
        if (!bessel_period_chi(t, d, chi).is_zero()) return chi;
    throw std::logic_error("choose_character: orthogonality violated");
}

struct Separation {
    Rational scalar;     // R(T1) / R(T2)
    SiegelTable g1;      // T1 - scalar * T2
    bool is_zero;
    PeriodValue g1_period;
};

/// Forms g1 = T1 - (R(T1, d, chi) / R(T2, d, chi)) T2. The ratio must be rational.
inline Separation separation_demo(const SiegelTable& t1, const SiegelTable& t2, Int d, const ClassCharacter& chi) {
    if (t1.weight() != t2.weight()) throw DomainError("separation_demo: weight mismatch");
    const PeriodValue r1 = bessel_period_chi(t1, d, chi);
    const PeriodValue r2 = bessel_period_chi(t2, d, chi);
    if (r2.is_zero()) throw DomainError("separation_demo: period of the second table vanishes");
    // r1 = s r2 with s rational iff the coordinates are proportional
    std::size_t lead = 0;
    while (r2[lead] == 0) ++lead;
    const Rational s = r1[lead] / r2[lead];
    if (!(r1 == r2 * s)) throw DomainError("separation_demo: period ratio is not rational");
    SiegelTable g1 = siegel::scale_add(t1, t2, -s);
    const bool zero = g1.is_zero();
    PeriodValue g1_period = bessel_period_chi(g1, d, chi);
    if (!g1_period.is_zero()) throw std::logic_error("separation_demo: period of g1 does not vanish");
    return {s, std::move(g1), zero, std::move(g1_period)};
}

struct RatioReport {
    Int d;
    Int h;
    Int w;
    PeriodValue R;
    Rational ratio;  // |R|^2 / (d^(k-1) w^2)
};

/// Ratio reports for every fundamental -d with d <= min(dmax, bound).
inline std::vector<RatioReport> ratio_table(const SiegelTable& t, Int dmax) {
    std::vector<RatioReport> out;
    const Int top = std::min(dmax, t.disc_bound());
    for (Int d = 3; d <= top; ++d) {
        if (!bqf::is_fundamental(-d)) continue;
        const auto G = bqf::class_group(-d);
        PeriodValue R = bessel_period(t, d);
        Rational denom = ipow(d, static_cast<unsigned long>(t.weight() - 1)) * (G->w * G->w);
        Rational ratio = norm_squared(R) / denom;
        out.push_back({d, static_cast<Int>(G->class_number()), G->w, std::move(R), std::move(ratio)});
    }
    return out;
}

}  // namespace siegelkit::periods
