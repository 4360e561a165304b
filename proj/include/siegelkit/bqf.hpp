#pragma once

// Positive-definite integral binary quadratic forms a x^2 + b x y + c y^2,
// identified with half-integral matrices [[a, b/2], [b/2, c]].

#include <algorithm>
#include <array>
#include <compare>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "siegelkit/arith.hpp"

namespace siegelkit::bqf {

struct QuadForm {
    Int a = 1;
    Int b = 0;
    Int c = 1;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

inline Int discriminant(const QuadForm& q) {
    return checked_add(checked_mul(q.b, q.b), -checked_mul(4, checked_mul(q.a, q.c)));
}

inline bool is_positive_definite(const QuadForm& q) { return q.a > 0 && discriminant(q) < 0; }

inline Int content(const QuadForm& q) { return std::gcd(std::gcd(q.a, q.b), q.c); }

/// |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
inline bool is_reduced(const QuadForm& q) {
    if (!is_positive_definite(q)) return false;
    if (abs_int(q.b) > q.a || q.a > q.c) return false;
    if ((abs_int(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
    return true;
}

/// Canonical key order for tables: (|disc|, a, b).
inline std::strong_ordering canonical_compare(const QuadForm& x, const QuadForm& y) {
    if (auto cmp = -discriminant(x) <=> -discriminant(y); cmp != 0) return cmp;
    if (auto cmp = x.a <=> y.a; cmp != 0) return cmp;
    return x.b <=> y.b;
}

struct CanonicalLess {
    bool operator()(const QuadForm& x, const QuadForm& y) const { return canonical_compare(x, y) < 0; }
};

inline std::string to_string(const QuadForm& q) {
    return std::to_string(q.a) + " " + std::to_string(q.b) + " " + std::to_string(q.c);
}

inline std::ostream& operator<<(std::ostream& os, const QuadForm& q) { return os << '(' << q.a << ',' << q.b << ',' << q.c << ')'; }

/// Integer matrix [[p, q], [r, s]] of determinant one.
class SL2Transform {
public:
    constexpr SL2Transform() = default;

    /// Throws DomainError unless p s - q r = 1.
    SL2Transform(Int p, Int q, Int r, Int s) : m_{p, q, r, s} {
        if (checked_add(checked_mul(p, s), -checked_mul(q, r)) != 1)
            throw DomainError("SL2 transform must have determinant 1");
    }

    static SL2Transform identity() { return {}; }
    static SL2Transform translation(Int k) { return {1, k, 0, 1}; }
    static SL2Transform inversion() { return {0, -1, 1, 0}; }

    Int p() const { return m_[0]; }
    Int q() const { return m_[1]; }
    Int r() const { return m_[2]; }
    Int s() const { return m_[3]; }

    friend SL2Transform operator*(const SL2Transform& x, const SL2Transform& y) {
        SL2Transform out;
        out.m_ = {checked_add(checked_mul(x.p(), y.p()), checked_mul(x.q(), y.r())),
                  checked_add(checked_mul(x.p(), y.q()), checked_mul(x.q(), y.s())),
                  checked_add(checked_mul(x.r(), y.p()), checked_mul(x.s(), y.r())),
                  checked_add(checked_mul(x.r(), y.q()), checked_mul(x.s(), y.s()))};
        return out;
    }

    SL2Transform inverse() const {
        SL2Transform out;
        out.m_ = {s(), -q(), -r(), p()};
        return out;
    }

    friend bool operator==(const SL2Transform&, const SL2Transform&) = default;

private:
    std::array<Int, 4> m_{1, 0, 0, 1};
};

inline std::string to_string(const SL2Transform& t) {
    return std::to_string(t.p()) + " " + std::to_string(t.q()) + " " + std::to_string(t.r()) + " " +
           std::to_string(t.s());
}

/// Form of the matrix A^T S A, i.e. Q(p x + q y, r x + s y).
inline QuadForm apply_sl2(const QuadForm& f, const SL2Transform& t) {
    using W = __int128;
    const W a = f.a, b = f.b, c = f.c, p = t.p(), q = t.q(), r = t.r(), s = t.s();
    const W na = a * p * p + b * p * r + c * r * r;
    const W nb = 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s;
    const W nc = a * q * q + b * q * s + c * s * s;
    auto narrow = [](W v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("form coefficient overflow");
        return static_cast<Int>(v);
    };
    return {narrow(na), narrow(nb), narrow(nc)};
}

struct Reduction {
    QuadForm form;
    SL2Transform transform;  // apply_sl2(input, transform) == form
};

/// Reduces a positive-definite form to the unique reduced form in its
/// SL2(Z)-class and returns the transform that achieves it.
inline Reduction reduce(const QuadForm& input) {
    if (!is_positive_definite(input)) throw DomainError("reduce: form is not positive definite");
    QuadForm f = input;
    SL2Transform acc;
    auto step = [&](const SL2Transform& t) {
        f = apply_sl2(f, t);
        acc = acc * t;
    };
    auto normalize = [&] {
        // bring b into (-a, a]
        const Int k = floor_div(f.a - f.b, 2 * f.a);
        if (k != 0) step(SL2Transform::translation(k));
    };
    normalize();
    while (f.a > f.c) {
        step(SL2Transform::inversion());
        normalize();
    }
    if (f.a == f.c && f.b < 0) step(SL2Transform::inversion());
    return {f, acc};
}

/// Fundamental discriminant test for D < 0; false for D >= 0.
inline bool is_fundamental(Int D) {
    if (D >= 0) return false;
    if (mod(D, 4) == 1) return is_squarefree(D);
    if (mod(D, 4) != 0) return false;
    const Int m = D / 4;
    return (mod(m, 4) == 2 || mod(m, 4) == 3) && is_squarefree(m);
}

/// All reduced forms (primitive or not) of discriminant D < 0, ordered by (a, b).
inline std::vector<QuadForm> enumerate_reduced(Int D) {
    if (D >= 0) throw DomainError("enumerate_reduced: discriminant must be negative");
    if (mod(D, 4) == 2 || mod(D, 4) == 3) throw DomainError("enumerate_reduced: discriminant must be 0 or 1 mod 4");
    std::vector<QuadForm> out;
    for (Int a = 1; 3 * a * a <= -D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            const Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            QuadForm f{a, b, num / (4 * a)};
            if (is_reduced(f)) out.push_back(f);
        }
    }
    return out;
}

namespace detail {

struct ExtGcd {
    Int g, x, y;  // g = x a + y b, g >= 0
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int qt = old_r / r;
        old_r = std::exchange(r, old_r - qt * r);
        old_s = std::exchange(s, old_s - qt * s);
        old_t = std::exchange(t, old_t - qt * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

}  // namespace detail

/// Dirichlet composition of primitive forms of equal discriminant; the result is reduced.
inline QuadForm compose(QuadForm f1, QuadForm f2) {
    const Int D = discriminant(f1);
    if (discriminant(f2) != D) throw DomainError("compose: discriminant mismatch");
    if (!is_positive_definite(f1) || !is_positive_definite(f2))
        throw DomainError("compose: forms must be positive definite");
    if (f1.a > f2.a) std::swap(f1, f2);
    const Int s = (f1.b + f2.b) / 2;
    const Int n = f2.b - s;
    Int y1 = 0, d = f1.a;
    if (f2.a % f1.a != 0) {
        auto eg = detail::ext_gcd(f2.a, f1.a);
        d = eg.g;
        y1 = eg.x;
    }
    Int x2 = 0, y2 = -1, d1 = d;
    if (s % d != 0) {
        auto eg = detail::ext_gcd(s, d);
        d1 = eg.g;
        x2 = eg.x;
        y2 = -eg.y;
    }
    using W = __int128;
    const Int v1 = f1.a / d1;
    const Int v2 = f2.a / d1;
    W rr = (W(y1) * y2 * n - W(x2) * f2.c) % v1;
    if (rr < 0) rr += v1;
    const W b3 = W(f2.b) + 2 * W(v2) * rr;
    const W a3 = W(v1) * v2;
    const W c3 = (b3 * b3 - D) / (4 * a3);
    if ((b3 * b3 - D) % (4 * a3) != 0) throw std::logic_error("compose: inexact");
    auto narrow = [](W v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("form coefficient overflow");
        return static_cast<Int>(v);
    };
    return reduce({narrow(a3), narrow(b3), narrow(c3)}).form;
}

/// Kronecker symbol (D | m) for m >= 1.
inline int kronecker(Int D, Int m) {
    if (m < 1) throw DomainError("kronecker: m must be positive");
    Int a = D, b = m;
    int k = 1;
    // strip factors of two from b
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (b % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (b % 2 == 0) {
            b /= 2;
            k *= tab2[mod(a, 8)];
        }
    }
    // b odd positive; Jacobi symbol (a | b)
    a = mod(a, b);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            k *= tab2[mod(b, 8)];
        }
        std::swap(a, b);
        if (mod(a, 4) == 3 && mod(b, 4) == 3) k = -k;
        a = mod(a, b);
    }
    return b == 1 ? k : 0;
}

/// Quadratic character m -> (D | m) attached to a negative fundamental discriminant.
class QuadCharacter {
public:
    explicit QuadCharacter(Int D) : D_(D) {
        if (!is_fundamental(D)) throw DomainError("QuadCharacter: discriminant must be negative fundamental");
    }
    Int discriminant() const noexcept { return D_; }
    int operator()(Int m) const { return kronecker(D_, m); }

private:
    Int D_;
};

inline int kronecker(const QuadCharacter& chi, Int m) { return chi(m); }

/// Number of (x, y) in Z^2 with Q(x, y) = n.
inline Int representation_count(const QuadForm& f, Int n) {
    if (!is_positive_definite(f)) throw DomainError("representation_count: form is not positive definite");
    if (n < 0) return 0;
    // 4 a Q = (2 a x + b y)^2 + |D| y^2
    const Int absD = -discriminant(f);
    Int count = 0;
    const Int ymax = static_cast<Int>(std::sqrt(static_cast<double>(4 * f.a * n) / absD)) + 1;
    for (Int y = -ymax; y <= ymax; ++y) {
        const Int rest = 4 * f.a * n - absD * y * y;
        if (rest < 0) continue;
        const Int root = static_cast<Int>(std::sqrt(static_cast<double>(rest))) + 1;
        const Int lo = (-root - f.b * y) / (2 * f.a) - 1;
        const Int hi = (root - f.b * y) / (2 * f.a) + 1;
        for (Int x = lo; x <= hi; ++x)
            if (f.a * x * x + f.b * x * y + f.c * y * y == n) ++count;
    }
    return count;
}

/// counts[n] = representation_count(f, n) for 0 <= n <= nmax, in one lattice sweep.
inline std::vector<Int> representation_counts(const QuadForm& f, Int nmax) {
    if (!is_positive_definite(f)) throw DomainError("representation_counts: form is not positive definite");
    std::vector<Int> counts(static_cast<std::size_t>(nmax) + 1, 0);
    const Int absD = -discriminant(f);
    const Int ymax = static_cast<Int>(std::sqrt(static_cast<double>(4 * f.a * nmax) / absD)) + 1;
    for (Int y = -ymax; y <= ymax; ++y) {
        const Int rest = 4 * f.a * nmax - absD * y * y;
        if (rest < 0) continue;
        const Int root = static_cast<Int>(std::sqrt(static_cast<double>(rest))) + 1;
        const Int lo = (-root - f.b * y) / (2 * f.a) - 1;
        const Int hi = (root - f.b * y) / (2 * f.a) + 1;
        for (Int x = lo; x <= hi; ++x) {
            const Int v = f.a * x * x + f.b * x * y + f.c * y * y;
            if (v <= nmax) ++counts[static_cast<std::size_t>(v)];
        }
    }
    return counts;
}

}  // namespace siegelkit::bqf
