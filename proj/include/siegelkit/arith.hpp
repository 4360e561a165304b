#pragma once

// Small integer number theory on int64 plus exact-rational helpers over GMP.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "siegelkit/errors.hpp"

namespace siegelkit {

using Int = std::int64_t;
using Integer = mpz_class;
using Rational = mpq_class;

/// Least non-negative residue of x modulo m > 0.
constexpr Int mod(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

constexpr Int abs_int(Int x) { return x < 0 ? -x : x; }

/// floor(x / m) for m > 0.
constexpr Int floor_div(Int x, Int m) { return (x - mod(x, m)) / m; }

/// Prime factorization of |n| by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    n = abs_int(n);
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_squarefree(Int n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return n != 0;
}

/// Positive divisors of n > 0 in ascending order.
inline std::vector<Int> divisors(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(Int n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

inline Integer ipow(Int base, unsigned long exp) {
    Integer r;
    Integer b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

/// sigma_e(n) = sum of d^e over positive divisors d of n.
inline Integer divisor_sigma(unsigned long e, Int n) {
    Integer s = 0;
    for (Int d : divisors(n)) s += ipow(d, e);
    return s;
}

/// Multiplies two int64 values, throwing std::overflow_error on overflow.
inline Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 overflow");
    return r;
}

inline Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 overflow");
    return r;
}

/// num / den in canonical form.
inline Rational make_rational(Int num, Int den) {
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

/// Canonical text form: "n" for integers, "n/d" in lowest terms otherwise.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses an optionally signed integer or num/den in lowest terms with den > 1.
/// Returns nullopt for anything else (including non-reduced fractions).
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    if (!is_digits(num)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = body.substr(slash + 1);
        if (!is_digits(den)) return std::nullopt;
        d = Integer(std::string(den), 10);
        if (d <= 1) return std::nullopt;
        Integer g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1) return std::nullopt;
    }
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

}  // namespace siegelkit
