#include <gtest/gtest.h>

#include "oracles.hpp"
#include "siegelkit/classgroup.hpp"

using namespace siegelkit;
using namespace siegelkit::bqf;

TEST(ClassGroup, Examples) {
    const auto g3 = class_group(-3);
    EXPECT_EQ(g3->class_number(), 1u);
    EXPECT_EQ(g3->w, 6);
    EXPECT_TRUE(g3->structure.empty());

    const auto g4 = class_group(-4);
    EXPECT_EQ(g4->w, 4);

    const auto g23 = class_group(-23);
    EXPECT_EQ(g23->class_number(), 3u);
    EXPECT_EQ(g23->w, 2);
    EXPECT_EQ(g23->structure, (std::vector<Int>{3}));
    EXPECT_EQ(g23->reps[g23->identity], (QuadForm{1, 1, 6}));

    const auto g47 = class_group(-47);
    EXPECT_EQ(g47->class_number(), 5u);
    EXPECT_EQ(g47->structure, (std::vector<Int>{5}));
}

TEST(ClassGroup, NonCyclicStructures) {
    // -84 = 4 * -21: genus theory gives 2^(3-1) classes, all of order <= 2
    EXPECT_EQ(class_group(-84)->structure, (std::vector<Int>{2, 2}));
    // -420 = 4 * 3 * 5 * 7: h = 8, exponent 2
    EXPECT_EQ(class_group(-420)->structure, (std::vector<Int>{2, 2, 2}));
    // -260: h = 8 = C2 x C4
    EXPECT_EQ(class_group(-260)->structure, (std::vector<Int>{2, 4}));
}

TEST(ClassGroup, RejectsNonFundamental) {
    EXPECT_THROW(class_group(-12), DomainError);
    EXPECT_THROW(class_group(-27), DomainError);
    EXPECT_THROW(class_group(5), DomainError);
}

TEST(ClassGroup, GroupAxiomsAndOracleClassNumber) {
    for (Int D = -3; D >= -1000; --D) {
        if (!is_fundamental(D)) continue;
        const auto G = class_group(D);
        const std::size_t h = G->class_number();
        ASSERT_EQ(static_cast<Int>(h), oracle::brute_class_number(D)) << D;
        Int prod = 1;
        for (Int n : G->structure) prod *= n;
        EXPECT_EQ(prod, static_cast<Int>(h)) << D;
        for (std::size_t i = 1; i < G->structure.size(); ++i) EXPECT_EQ(G->structure[i] % G->structure[i - 1], 0);
        for (std::size_t i = 0; i < h; ++i) {
            EXPECT_EQ(G->comp[i][G->identity], i);
            EXPECT_NO_THROW(G->inverse(i));
            for (std::size_t j = 0; j < h; ++j) {
                EXPECT_EQ(G->comp[i][j], G->comp[j][i]);
                for (std::size_t k = 0; k < h; ++k) ASSERT_EQ(G->comp[G->comp[i][j]][k], G->comp[i][G->comp[j][k]]) << D;
            }
        }
        // (a, b, c) and (a, -b, c) are mutually inverse
        for (std::size_t i = 0; i < h; ++i) {
            const QuadForm& f = G->reps[i];
            EXPECT_EQ(G->comp[i][G->index_of({f.a, -f.b, f.c})], G->identity);
        }
    }
}

TEST(Characters, Examples) {
    const auto c3 = characters(class_group(-3));
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_TRUE(c3[0].is_trivial());

    const auto c23 = characters(class_group(-23));
    ASSERT_EQ(c23.size(), 3u);
    EXPECT_EQ(c23[0].order(), 1);
    EXPECT_EQ(c23[1].order(), 3);
    EXPECT_EQ(c23[2].order(), 3);

    EXPECT_EQ(characters(class_group(-47)).size(), 5u);
}

TEST(Characters, DistinctHomomorphismsAndOrthogonality) {
    for (Int D = -3; D >= -600; --D) {
        if (!is_fundamental(D)) continue;
        const auto G = class_group(D);
        const auto chars = characters(G);
        ASSERT_EQ(chars.size(), G->class_number());
        EXPECT_TRUE(chars[0].is_trivial());
        // distinct as functions: compare values in a common cyclotomic field
        const Int e = G->exponent();
        std::set<std::vector<Int>> seen;
        for (const auto& chi : chars) {
            EXPECT_EQ(e % chi.order(), 0);
            std::vector<Int> v;
            for (Int x : chi.exponents()) v.push_back(x * (e / chi.order()));
            EXPECT_TRUE(seen.insert(v).second);
            CycloInteger sum(chi.order());
            for (std::size_t c = 0; c < G->class_number(); ++c) sum += chi.value(c);
            if (chi.is_trivial()) EXPECT_EQ(sum, CycloInteger::scalar(1, static_cast<Int>(G->class_number())));
            else EXPECT_TRUE(sum.is_zero()) << D;
        }
    }
}

TEST(Characters, RejectsNonHomomorphism) {
    const auto G = class_group(-23);
    EXPECT_THROW(ClassCharacter(G, 3, {0, 1, 1}), DomainError);
    EXPECT_THROW(ClassCharacter(G, 3, {0, 0, 0}), DomainError);  // order mismatch
    EXPECT_NO_THROW(ClassCharacter(G, 1, {0, 0, 0}));
}

TEST(Theta, Examples) {
    const auto G4 = class_group(-4);
    const auto theta = theta_coefficients(characters(G4)[0], 30);
    EXPECT_EQ(theta.at(1), CycloInteger::scalar(1, 1));
    EXPECT_EQ(theta.at(2), CycloInteger::scalar(1, 1));
    EXPECT_EQ(theta.at(3), CycloInteger::scalar(1, 0));
    EXPECT_EQ(theta.at(3).constant(), oracle::ideal_count(-4, 3));
    EXPECT_EQ(theta.at(25).constant(), oracle::ideal_count(-4, 25));
    for (Int D : {-23, -47, -84, -260}) {
        for (const auto& chi : characters(class_group(D))) EXPECT_EQ(theta_coefficients(chi, 1).at(1), CycloInteger::scalar(chi.order(), 1));
    }
    EXPECT_THROW(theta.at(0), BoundError);
    EXPECT_THROW(theta.at(31), BoundError);
}

TEST(Theta, IdealCountIdentity) {
    for (Int D = -3; D >= -120; --D) {
        if (!is_fundamental(D)) continue;
        const auto G = class_group(D);
        const auto counts = ideal_counts(*G, 200);
        for (Int n = 1; n <= 200; ++n) {
            Int total = 0;
            for (const auto& c : counts) total += c[static_cast<std::size_t>(n)];
            EXPECT_EQ(total, oracle::ideal_count(D, n)) << D << " " << n;
        }
    }
}

TEST(Theta, Multiplicativity) {
    for (Int D : {-23, -47, -56, -84, -104, -260}) {
        for (const auto& chi : characters(class_group(D))) {
            const auto th = theta_coefficients(chi, 900);
            for (Int m = 1; m <= 30; ++m)
                for (Int n = 1; n <= 30; ++n)
                    if (std::gcd(m, n) == 1) EXPECT_EQ(th.at(m * n), th.at(m) * th.at(n)) << D << " " << m << " " << n;
        }
    }
}

TEST(Theta, CoefficientsAreReal) {
    // N_c(n) = N_{c^-1}(n), so every r(n) is fixed by complex conjugation
    for (Int D : {-23, -47, -71, -260}) {
        for (const auto& chi : characters(class_group(D))) {
            const auto th = theta_coefficients(chi, 120);
            for (Int n = 1; n <= 120; ++n) EXPECT_EQ(th.at(n), th.at(n).conj()) << D << " " << n;
        }
    }
}
