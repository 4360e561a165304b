#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "siegelkit/siegel.hpp"

using namespace siegelkit;
using namespace siegelkit::siegel;
using bqf::QuadForm;

using support::lift;
using support::random_transform;
using support::to_form;

TEST(SkLift, Examples) {
    const auto phi = jacobi::cusp_basis(10, 60)[0];
    const auto& t = lift(10, 60);
    EXPECT_EQ(t.weight(), 10);
    EXPECT_EQ(t.provenance(), "saito-kurokawa lift, weight 10");
    EXPECT_EQ(t.coeff({1, 1, 1}), 1);
    EXPECT_EQ(t.coeff({1, 0, 1}), phi.c(4));
    EXPECT_EQ(t.coeff({1, 0, 1}), -2);
    EXPECT_EQ(t.coeff({2, 2, 2}), phi.c(12) + 512 * phi.c(3));
    EXPECT_EQ(t.coeff({2, 2, 2}), -272 + 512);
    EXPECT_EQ(t.coeff({2, 0, 2}), phi.c(16) + 512 * phi.c(4));
}

TEST(SkLift, DenseOverReducedClasses) {
    const auto& t = lift(10, 60);
    EXPECT_EQ(t.entries().size(), reduced_forms_up_to(60).size());
    std::size_t brute = 0;
    for (Int d = 3; d <= 60; ++d)
        if (d % 4 == 0 || d % 4 == 3) brute += oracle::brute_reduced_forms(-d).size();
    EXPECT_EQ(t.entries().size(), brute);
}

TEST(SkLift, Errors) {
    const auto phi = jacobi::cusp_basis(10, 40)[0];
    EXPECT_THROW(sk_lift(phi, 41), BoundError);
    EXPECT_THROW(sk_lift(jacobi::jacobi_eisenstein(4, 40), 40), DomainError);
}

TEST(SkLift, WellDefinedOnClasses) {
    const auto phi = jacobi::cusp_basis(12, 200)[0];
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto f = to_form(oracle::random_form(rng, 200));
        const auto g = bqf::apply_sl2(f, random_transform(rng, 8));
        EXPECT_EQ(lift_coefficient(phi, f), lift_coefficient(phi, g)) << f << " " << g;
    }
}

TEST(Coeff, InvariantUnderEquivalence) {
    const auto& t = lift(10, 60);
    EXPECT_EQ(t.coeff({1, 1, 1}), t.coeff({1, -1, 1}));
    EXPECT_EQ(t.coeff({5, 4, 1}), t.coeff({1, 0, 1}));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto f = to_form(oracle::random_form(rng, 60));
        EXPECT_EQ(t.coeff(bqf::apply_sl2(f, random_transform(rng, 10))), t.coeff(f));
    }
}

TEST(Coeff, Errors) {
    const auto& t = lift(10, 60);
    EXPECT_THROW(t.coeff({1, 0, 100}), BoundError);
    EXPECT_THROW(t.coeff({1, 2, 1}), DomainError);
    EXPECT_THROW(t.coeff({-1, 0, -1}), DomainError);
}

TEST(SiegelTable, RejectsBadEntries) {
    Entries e;
    for (const auto& f : reduced_forms_up_to(8)) e.emplace(f, Rational(1));
    EXPECT_NO_THROW(SiegelTable(10, 8, "ok", e));
    auto missing = e;
    missing.erase(QuadForm{1, 1, 2});
    EXPECT_THROW(SiegelTable(10, 8, "x", missing), DomainError);
    auto nonreduced = e;
    nonreduced.emplace(QuadForm{5, 4, 1}, Rational(1));
    EXPECT_THROW(SiegelTable(10, 8, "x", nonreduced), DomainError);
    EXPECT_THROW(SiegelTable(10, 8, "two\nlines", e), DomainError);
}

TEST(ScaleAdd, Examples) {
    const auto& t = lift(10, 60);
    EXPECT_TRUE(scale_add(t, t, -1).is_zero());
    EXPECT_TRUE(scale_add(t, SiegelTable::zero(10, 60), 7).same_coefficients(t));
    EXPECT_TRUE(scale_add(scaled(t, 5), t, -5).is_zero());
    EXPECT_THROW(scale_add(t, lift(12, 60), 1), DomainError);
    EXPECT_EQ(scale_add(t, lift(10, 40).restricted(40), 1).disc_bound(), 40);
}

TEST(HeckeTp, WeightTenTimesTwo) {
    const auto& t = lift(10, 200);
    const auto image = hecke_tp(t, 2);
    EXPECT_EQ(image.disc_bound(), 50);
    EXPECT_TRUE(image.same_coefficients(scaled(t.restricted(50), 240)));
}

TEST(HeckeTp, ZeroAndLinearity) {
    EXPECT_TRUE(hecke_tp(SiegelTable::zero(10, 100), 2).is_zero());
    EXPECT_TRUE(hecke_tp(SiegelTable::zero(12, 100), 3).is_zero());
    // random rational combination of two weight-10 tables, one of them a non-eigenform
    const auto& t1 = lift(10, 120);
    Entries e;
    std::mt19937_64 rng(3);
    for (const auto& f : reduced_forms_up_to(120)) e.emplace(f, make_rational(Int(rng() % 21) - 10, Int(rng() % 5) + 1));
    const SiegelTable t2(10, 120, "random", e);
    for (Int p : {2, 3}) {
        const Rational lambda = make_rational(-7, 3);
        EXPECT_EQ(hecke_tp(scale_add(t1, t2, lambda), p).entries(), scale_add(hecke_tp(t1, p), hecke_tp(t2, p), lambda).entries());
    }
}

TEST(HeckeTp, Errors) {
    const auto& t = lift(10, 60);
    EXPECT_THROW(hecke_tp(t, 4), DomainError);
    EXPECT_THROW(hecke_tp(t, 5), BoundError);  // 60 / 25 = 2 < 3
}

TEST(Eigenvalue, Examples) {
    const auto r10 = eigenvalue_p(lift(10, 200), 2);
    EXPECT_EQ(r10.p, 2);
    EXPECT_EQ(r10.lambda, 240);
    EXPECT_EQ(r10.verified_keys, static_cast<Int>(reduced_forms_up_to(50).size()));
    EXPECT_GE(r10.verified_keys, 1);
    EXPECT_EQ(eigenvalue_p(lift(12, 200), 2).lambda, 2784);
    EXPECT_EQ(eigenvalue_p(scale_add(lift(10, 200), lift(10, 200), 1), 2).lambda, 240);
}

TEST(Eigenvalue, Errors) {
    EXPECT_THROW(eigenvalue_p(SiegelTable::zero(10, 100), 2), BoundError);
    Entries e;
    for (const auto& f : reduced_forms_up_to(100)) e.emplace(f, Rational(0));
    e[QuadForm{1, 1, 1}] = 1;
    e[QuadForm{1, 0, 1}] = 1;
    EXPECT_THROW(eigenvalue_p(SiegelTable(10, 100, "spike", e), 2), DomainError);
}

TEST(SkEigenvalue, Examples) {
    const auto g18 = qexp::cusp_eigenform(18, 10);
    const auto g22 = qexp::cusp_eigenform(22, 10);
    EXPECT_EQ(sk_eigenvalue_p(g18, 10, 2), 240);
    EXPECT_EQ(sk_eigenvalue_p(g18, 10, 3), 21960);
    EXPECT_EQ(sk_eigenvalue_p(g22, 12, 2), 2784);
    EXPECT_THROW(sk_eigenvalue_p(g18, 12, 2), DomainError);
}

TEST(SkEigenvalue, AgreesWithHeckeAction) {
    for (int k : {10, 12}) {
        const auto g = qexp::cusp_eigenform(2 * k - 2, 10);
        const auto& t = lift(k, 300);
        for (Int p : {2, 3}) EXPECT_EQ(eigenvalue_p(t, p).lambda, sk_eigenvalue_p(g, k, p)) << k << " " << p;
    }
}
