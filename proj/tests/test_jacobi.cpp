#include <gtest/gtest.h>

#include "siegelkit/jacobi.hpp"

using namespace siegelkit;
using namespace siegelkit::jacobi;

// Frozen from an independent Python oracle (Cohen H via generating-function
// Bernoulli numbers, then (E6 E41 - E4 E61) / 144 and (E4^2 E41 - E6 E61) / 144).
namespace frozen {
const std::vector<std::pair<Int, Int>> e41{{0, 1}, {3, 56}, {4, 126}, {7, 576}, {8, 756}};
const std::vector<std::pair<Int, Int>> e61{{0, 1}, {3, -88}, {4, -330}, {7, -4224}, {8, -7524}};
const std::vector<std::pair<Int, Int>> phi10{{0, 0},     {3, 1},     {4, -2},    {7, -16},    {8, 36},      {11, 99},
                                             {12, -272}, {15, -240}, {16, 1056}, {19, -253},  {20, -1800},  {23, 2736},
                                             {24, -1464}, {47, 44064}, {71, -84816}, {104, -719784}};
const std::vector<std::pair<Int, Int>> phi12{{0, 0}, {3, 1}, {4, 10}, {7, -88}, {8, -132}, {11, 1275}, {12, 736}, {23, -14136}};
}  // namespace frozen

TEST(JacobiEisenstein, Examples) {
    const auto e4 = jacobi_eisenstein(4, 40);
    const auto e6 = jacobi_eisenstein(6, 40);
    for (auto [D, v] : frozen::e41) EXPECT_EQ(e4.c(D), v) << D;
    for (auto [D, v] : frozen::e61) EXPECT_EQ(e6.c(D), v) << D;
    EXPECT_EQ(e4.c(3), qexp::cohen_h(3, 3) / qexp::cohen_h(3, 0));
    EXPECT_EQ(e6.c(4), qexp::cohen_h(5, 4) / qexp::cohen_h(5, 0));
    EXPECT_THROW(jacobi_eisenstein(8, 10), DomainError);
}

TEST(JacobiEisenstein, CoefficientsAreIntegers) {
    for (int k : {4, 6}) {
        const auto e = jacobi_eisenstein(k, 300);
        for (Int D = 0; D <= 300; ++D)
            if (on_grid(D)) EXPECT_EQ(e.c(D).get_den(), 1) << k << " " << D;
    }
}

TEST(JacobiForm, GridAccess) {
    const auto e4 = jacobi_eisenstein(4, 20);
    EXPECT_THROW(e4.c(1), DomainError);
    EXPECT_THROW(e4.c(2), DomainError);
    EXPECT_THROW(e4.c(24), BoundError);
    EXPECT_EQ(e4.coefficient(1, 1), e4.c(3));
    EXPECT_EQ(e4.coefficient(1, 2), e4.c(0));
    EXPECT_EQ(e4.coefficient(2, 1), e4.c(7));
}

TEST(TimesQSeries, Examples) {
    const auto e41 = jacobi_eisenstein(4, 60);
    EXPECT_EQ(times_qseries(e41, qexp::QSeries::constant(1, 20)), e41);
    const auto e6 = qexp::eisenstein(6, 20);
    const auto prod = times_qseries(e41, e6);
    EXPECT_EQ(prod.weight(), 10);
    EXPECT_EQ(prod.c(3), e6[0] * e41.c(3));
    EXPECT_EQ(prod.c(4), e41.c(4) + e6[1] * e41.c(0));
    const auto diff = add_scaled(times_qseries(e41, e6), times_qseries(jacobi_eisenstein(6, 60), qexp::eisenstein(4, 20)), -1);
    EXPECT_EQ(diff.c(0), 0);
    EXPECT_EQ(diff.c(3), 144);
    EXPECT_THROW(times_qseries(e41, qexp::eisenstein(6, 10)), BoundError);
}

TEST(CuspBasis, Examples) {
    const auto b10 = cusp_basis(10, 120);
    ASSERT_EQ(b10.size(), 1u);
    for (auto [D, v] : frozen::phi10) EXPECT_EQ(b10[0].c(D), v) << D;

    const auto b12 = cusp_basis(12, 40);
    ASSERT_EQ(b12.size(), 1u);
    for (auto [D, v] : frozen::phi12) EXPECT_EQ(b12[0].c(D), v) << D;

    EXPECT_TRUE(cusp_basis(8, 40).empty());
}

TEST(CuspBasis, DimensionMatchesEllipticCuspForms) {
    for (int k : {8, 10, 12, 14, 16, 18, 20, 22}) {
        const auto basis = cusp_basis(k, 160);
        EXPECT_EQ(static_cast<int>(basis.size()), qexp::dim_cusp_forms(2 * k - 2)) << k;
        for (const auto& phi : basis) EXPECT_EQ(phi.c(0), 0);
    }
}

TEST(CuspBasis, ValuesIndependentOfBound) {
    for (int k : {10, 12, 16}) {
        const auto small = cusp_basis(k, 80);
        const auto large = cusp_basis(k, 200);
        ASSERT_EQ(small.size(), large.size());
        for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(large[i].truncated(80), small[i]);
    }
}

TEST(CuspBasis, NormalizedEchelon) {
    const auto basis = cusp_basis(16, 120);  // dim S_30 = 2
    ASSERT_EQ(basis.size(), 2u);
    std::vector<Int> leads;
    for (const auto& phi : basis) {
        Int D = 0;
        while (phi.c(D) == 0) D += (D % 4 == 0) ? 3 : 1;
        EXPECT_EQ(phi.c(D), 1);
        leads.push_back(D);
    }
    EXPECT_LT(leads[0], leads[1]);
    EXPECT_EQ(basis[1].c(leads[0]), 0);
}

TEST(CuspBasis, RejectsTinyBoundAndBadWeight) {
    EXPECT_THROW(cusp_basis(16, 3), BoundError);
    EXPECT_THROW(cusp_basis(11, 50), DomainError);
}
