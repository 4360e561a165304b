#pragma once

// Class groups of imaginary quadratic fields realized on reduced forms,
// their characters, and the attached theta series.

#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "siegelkit/bqf.hpp"
#include "siegelkit/cyclotomic.hpp"

namespace siegelkit::bqf {

/// Class group of discriminant D < 0 (fundamental). Element i is reps[i].
struct ClassGroup {
    Int D = -3;
    std::vector<QuadForm> reps;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> comp;
    std::vector<Int> structure;  // invariant factors n1 | n2 | ..., empty when trivial
    Int w = 2;

    std::size_t class_number() const noexcept { return reps.size(); }

    std::size_t index_of(const QuadForm& f) const {
        const QuadForm r = reduce(f).form;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == r) return i;
        throw DomainError("form does not belong to this class group");
    }

    std::size_t inverse(std::size_t i) const {
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (comp[i][j] == identity) return j;
        throw std::logic_error("class group without inverse");
    }

    std::size_t power(std::size_t i, Int n) const {
        std::size_t acc = identity;
        for (Int k = 0; k < n; ++k) acc = comp[acc][i];
        return acc;
    }

    Int element_order(std::size_t i) const {
        Int n = 1;
        for (std::size_t x = i; x != identity; x = comp[x][i]) ++n;
        return n;
    }

    Int exponent() const {
        Int e = 1;
        for (std::size_t i = 0; i < reps.size(); ++i) e = std::lcm(e, element_order(i));
        return e;
    }
};

namespace detail {

inline std::vector<Int> invariant_factors(const ClassGroup& G) {
    const Int h = static_cast<Int>(G.class_number());
    // per prime, exponents of the cyclic p-factors in decreasing order
    std::vector<std::vector<Int>> prime_powers;
    for (auto [p, e] : factorize(h)) {
        std::vector<Int> kernel_sizes{1};
        Int pj = 1;
        while (kernel_sizes.back() < ipow(p, e).get_si()) {
            pj *= p;
            Int count = 0;
            for (std::size_t i = 0; i < G.class_number(); ++i)
                if (G.power(i, pj) == G.identity) ++count;
            kernel_sizes.push_back(count);
        }
        // factors_at_least[j] = number of cyclic factors of order >= p^j
        std::vector<Int> factors_at_least;
        for (std::size_t j = 1; j < kernel_sizes.size(); ++j) {
            Int ratio = kernel_sizes[j] / kernel_sizes[j - 1];
            Int r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            factors_at_least.push_back(r);
        }
        std::vector<Int> orders;  // decreasing
        const Int count = factors_at_least.empty() ? 0 : factors_at_least.front();
        for (Int f = 0; f < count; ++f) {
            Int order = 1;
            for (Int at_least : factors_at_least)
                if (at_least > f) order *= p;
            orders.push_back(order);
        }
        prime_powers.push_back(orders);
    }
    std::size_t rank = 0;
    for (const auto& v : prime_powers) rank = std::max(rank, v.size());
    std::vector<Int> out(rank, 1);  // out[0] largest
    for (const auto& v : prime_powers)
        for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Builds the class group of a negative fundamental discriminant.
inline std::shared_ptr<const ClassGroup> class_group(Int D) {
    if (!is_fundamental(D)) throw DomainError("class_group: " + std::to_string(D) + " is not a negative fundamental discriminant");
    auto G = std::make_shared<ClassGroup>();
    G->D = D;
    G->reps = enumerate_reduced(D);
    G->w = D == -3 ? 6 : D == -4 ? 4 : 2;
    const QuadForm principal{1, mod(D, 2), (mod(D, 2) - D) / 4};
    G->identity = G->index_of(principal);
    const std::size_t h = G->reps.size();
    std::map<QuadForm, std::size_t, CanonicalLess> index;
    for (std::size_t i = 0; i < h; ++i) index.emplace(G->reps[i], i);
    G->comp.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            const std::size_t k = index.at(compose(G->reps[i], G->reps[j]));
            G->comp[i][j] = G->comp[j][i] = k;
        }
    G->structure = detail::invariant_factors(*G);
    return G;
}

/// Character of a class group with values in the m-th roots of unity:
/// class i maps to zeta_m^exps[i].
class ClassCharacter {
public:
    ClassCharacter(std::shared_ptr<const ClassGroup> group, Int order, std::vector<Int> exps)
        : group_(std::move(group)), order_(order), exps_(std::move(exps)) {
        const auto& G = *group_;
        if (order_ < 1 || exps_.size() != G.class_number()) throw DomainError("ClassCharacter: bad shape");
        Int g = order_;
        for (auto& e : exps_) {
            e = mod(e, order_);
            g = std::gcd(g, e);
        }
        if (g != 1) throw DomainError("ClassCharacter: values do not have exact order m");
        for (std::size_t i = 0; i < exps_.size(); ++i)
            for (std::size_t j = 0; j < exps_.size(); ++j)
                if (exps_[G.comp[i][j]] != mod(exps_[i] + exps_[j], order_))
                    throw DomainError("ClassCharacter: not a homomorphism");
    }

    const ClassGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const ClassGroup>& group_ptr() const noexcept { return group_; }
    Int order() const noexcept { return order_; }
    const std::vector<Int>& exponents() const noexcept { return exps_; }
    bool is_trivial() const noexcept { return order_ == 1; }

    CycloInteger value(std::size_t cls) const { return CycloInteger::zeta_power(order_, exps_.at(cls)); }
    CycloInteger inverse_value(std::size_t cls) const { return CycloInteger::zeta_power(order_, -exps_.at(cls)); }

private:
    std::shared_ptr<const ClassGroup> group_;
    Int order_;
    std::vector<Int> exps_;
};

/// All characters of G: trivial first, then by order, then by exponent vector.
inline std::vector<ClassCharacter> characters(const std::shared_ptr<const ClassGroup>& group) {
    const ClassGroup& G = *group;
    const Int e = G.exponent();
    const std::size_t h = G.class_number();
    // Extend characters (as maps to Z/e) from a subgroup H one generator at a time.
    std::vector<bool> in_sub(h, false);
    std::vector<std::size_t> members{G.identity};
    in_sub[G.identity] = true;
    std::vector<std::vector<Int>> chars{std::vector<Int>(h, 0)};
    for (std::size_t g = 0; g < h; ++g) {
        if (in_sub[g]) continue;
        Int r = 1;
        std::size_t gr = g;
        while (!in_sub[gr]) {
            gr = G.comp[gr][g];
            ++r;
        }
        std::vector<std::vector<Int>> extended;
        for (const auto& chi : chars) {
            const Int t = chi[gr];  // divisible by r
            for (Int k = 0; k < r; ++k) {
                const Int s = t / r + k * (e / r);
                std::vector<Int> ext = chi;
                std::size_t gj = g;
                for (Int j = 1; j < r; ++j) {
                    for (std::size_t m : members) ext[G.comp[m][gj]] = mod(chi[m] + j * s, e);
                    gj = G.comp[gj][g];
                }
                extended.push_back(std::move(ext));
            }
        }
        std::size_t gj = g;
        const std::vector<std::size_t> base = members;
        for (Int j = 1; j < r; ++j) {
            for (std::size_t m : base) {
                const std::size_t x = G.comp[m][gj];
                in_sub[x] = true;
                members.push_back(x);
            }
            gj = G.comp[gj][g];
        }
        chars = std::move(extended);
    }
    std::vector<ClassCharacter> out;
    for (const auto& chi : chars) {
        Int gcd_all = e;
        for (Int v : chi) gcd_all = std::gcd(gcd_all, v);
        const Int order = e / gcd_all;
        std::vector<Int> exps(h);
        for (std::size_t i = 0; i < h; ++i) exps[i] = chi[i] / gcd_all;
        out.emplace_back(group, order, std::move(exps));
    }
    std::sort(out.begin(), out.end(), [](const ClassCharacter& x, const ClassCharacter& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.exponents() < y.exponents();
    });
    return out;
}

/// Coefficients r(1..nmax) of theta_Lambda = sum over nonzero ideals of Lambda(a) q^N(a).
struct ThetaSeries {
    ClassCharacter character;
    Int nmax;
    std::vector<CycloInteger> coeffs;  // coeffs[n] for 0 <= n <= nmax; coeffs[0] = 0

    const CycloInteger& at(Int n) const {
        if (n < 1 || n > nmax) throw BoundError("theta coefficient index out of range");
        return coeffs[static_cast<std::size_t>(n)];
    }
};

/// Per-class ideal counts: counts[i][n] = N_{rep i}(n) / w.
inline std::vector<std::vector<Int>> ideal_counts(const ClassGroup& G, Int nmax) {
    std::vector<std::vector<Int>> out;
    for (const auto& f : G.reps) {
        auto counts = representation_counts(f, nmax);
        for (Int n = 1; n <= nmax; ++n) {
            auto& v = counts[static_cast<std::size_t>(n)];
            if (v % G.w != 0) throw std::logic_error("representation count not divisible by unit count");
            v /= G.w;
        }
        counts[0] = 0;
        out.push_back(std::move(counts));
    }
    return out;
}

/// r(n) = sum_c Lambda(c) N_c(n) / w, exactly in Z[zeta_m].
inline ThetaSeries theta_coefficients(const ClassCharacter& chi, Int nmax) {
    if (nmax < 1) throw DomainError("theta_coefficients: nmax must be at least 1");
    const ClassGroup& G = chi.group();
    const auto counts = ideal_counts(G, nmax);
    ThetaSeries out{chi, nmax, {}};
    out.coeffs.reserve(static_cast<std::size_t>(nmax) + 1);
    out.coeffs.emplace_back(chi.order());
    std::vector<Int> buckets(static_cast<std::size_t>(chi.order()));
    for (Int n = 1; n <= nmax; ++n) {
        std::fill(buckets.begin(), buckets.end(), 0);
        for (std::size_t i = 0; i < G.class_number(); ++i)
            buckets[static_cast<std::size_t>(chi.exponents()[i])] += counts[i][static_cast<std::size_t>(n)];
        out.coeffs.push_back(CycloInteger::from_power_weights(chi.order(), buckets));
    }
    return out;
}

}  // namespace siegelkit::bqf
