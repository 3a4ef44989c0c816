#include <gtest/gtest.h>

#include "binlab/families.hpp"
#include "binlab/laurent_cf.hpp"
#include "binlab/seq_kit.hpp"
#include "oracles.hpp"

namespace binlab {
namespace {

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(Poly, ArithmeticAndFormatting) {
    const Poly x = Poly::x();
    EXPECT_EQ(x.str(), "X");
    EXPECT_EQ(Poly::monomial(-1, 1).str(), "-1*X");
    EXPECT_EQ((x * x + Poly::monomial(1, 0)).str(), "X^2 + 1");
    EXPECT_EQ(Poly(std::vector<Rational>{Rational(1), Rational(-1, 3), Rational(2)}).str(), "2*X^2 - 1/3*X + 1");
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ((x + Poly::monomial(-1, 1)).degree(), -1);
}

TEST(BuildL, Examples) {
    const LaurentSeries l1 = build_L(SeriesId::L1, 3);
    EXPECT_EQ(l1.start_exponent(), -1);
    EXPECT_EQ(l1.coefficients(), ints({1, 0, -1}));
    EXPECT_EQ(build_L(SeriesId::L2, 7).coefficients(), ints({1, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(build_L(SeriesId::L1, 1).coefficients(), ints({1}));
}

TEST(LaurentSeries, ReciprocalKeepsRelativePrecision) {
    // 1 / (X^-1 - X^-3) = X (1 - X^-2)^-1 = X + X^-1 + X^-3 + ...
    const LaurentSeries s(-1, ints({1, 0, -1, 0, 0}));
    const LaurentSeries r = s.reciprocal();
    EXPECT_EQ(r.start_exponent(), 1);
    EXPECT_EQ(r.coefficients(), ints({1, 0, 1, 0, 1}));
    EXPECT_THROW(LaurentSeries(-1, ints({0, 0})).reciprocal(), std::domain_error);
}

TEST(LaurentSeries, UnknownCoefficientsAreNotInvented) {
    const LaurentSeries s(2, ints({1, 5}));
    EXPECT_FALSE(s.polynomial_part().has_value());
    EXPECT_THROW(s.coefficient(0), std::out_of_range);
    EXPECT_EQ(s.coefficient(3), 0);
}

TEST(CfExpand, L1IsAllX) {
    const CFExpansion cf = cf_expand(build_L(SeriesId::L1, 61), 30);
    EXPECT_TRUE(cf.integer_part.is_zero());
    ASSERT_EQ(cf.partial_quotients.size(), 30u);
    for (const auto& q : cf.partial_quotients) EXPECT_EQ(q, Poly::x());
    EXPECT_FALSE(cf.exhausted_precision);
}

TEST(CfExpand, L2FollowsPaperfolding) {
    const CFExpansion cf = cf_expand(build_L(SeriesId::L2, 61), 30);
    ASSERT_EQ(cf.partial_quotients.size(), 30u);
    for (std::size_t i = 0; i < 30; ++i)
        EXPECT_EQ(cf.partial_quotients[i], Poly::monomial(oracle::paperfolding_term(i + 1), 1)) << i;
}

TEST(CfExpand, CertifiedQuotientCountFollowsPrecision) {
    for (std::size_t p = 1; p <= 41; ++p) {
        for (SeriesId which : {SeriesId::L1, SeriesId::L2}) {
            const CFExpansion cf = cf_expand(build_L(which, p), 1000);
            EXPECT_TRUE(cf.exhausted_precision);
            // Each degree-one quotient consumes two known coefficients.
            EXPECT_EQ(cf.partial_quotients.size(), p / 2) << "precision " << p;
            EXPECT_GE(cf.partial_quotients.size(), (p - 1) / 2);
            for (const auto& q : cf.partial_quotients) EXPECT_EQ(q.degree(), 1);
        }
    }
}

TEST(CfExpand, SingleTermSeries) {
    const CFExpansion cf = cf_expand(LaurentSeries(-1, ints({1, 0})), 1);
    EXPECT_TRUE(cf.integer_part.is_zero());
    ASSERT_EQ(cf.partial_quotients.size(), 1u);
    EXPECT_EQ(cf.partial_quotients[0], Poly::x());
}

TEST(CfExpand, IntegerPartAndHigherDegreeQuotients) {
    // 2X + 1 + 1/(X^2) = [2X + 1; X^2] with known tail zeros.
    const CFExpansion cf = cf_expand(LaurentSeries(1, ints({2, 1, 0, 1, 0, 0, 0, 0})), 3);
    EXPECT_EQ(cf.integer_part.str(), "2*X + 1");
    ASSERT_GE(cf.partial_quotients.size(), 1u);
    EXPECT_EQ(cf.partial_quotients[0].str(), "X^2");
    EXPECT_TRUE(cf.exhausted_precision);
}

TEST(CfExpand, ZeroSeriesRejected) {
    EXPECT_THROW(cf_expand(LaurentSeries(-1, ints({0, 0, 0})), 3), std::invalid_argument);
}

TEST(Convergent, Examples) {
    CFExpansion one{Poly{}, {Poly::x()}, false};
    auto [p1, q1] = convergent(one, 1);
    EXPECT_EQ(p1, Poly::monomial(1, 0));
    EXPECT_EQ(q1, Poly::x());

    CFExpansion two{Poly{}, {Poly::x(), Poly::x()}, false};
    auto [p2, q2] = convergent(two, 2);
    EXPECT_EQ(p2, Poly::x());
    EXPECT_EQ(q2.str(), "X^2 + 1");
    EXPECT_THROW(convergent(two, 3), std::out_of_range);
}

TEST(Convergent, L1FourthConvergentAgreesThroughEighthCoefficient) {
    const LaurentSeries l1 = build_L(SeriesId::L1, 9);
    const CFExpansion cf = cf_expand(build_L(SeriesId::L1, 61), 30);
    const auto [p, q] = convergent(cf, 4);
    EXPECT_EQ(q.degree(), 4);
    const LaurentSeries approx = series_of_quotient(p, q, -9);
    for (std::int64_t e = -1; e >= -8; --e) EXPECT_EQ(approx.coefficient(e), l1.coefficient(e)) << e;
    EXPECT_NE(approx.coefficient(-9), l1.coefficient(-9));
}

TEST(Convergent, ReconstructionMatchesInputToBestApproximationOrder) {
    for (SeriesId which : {SeriesId::L1, SeriesId::L2}) {
        const LaurentSeries s = build_L(which, 61);
        const CFExpansion cf = cf_expand(s, 30);
        for (std::size_t k = 1; k <= cf.partial_quotients.size(); ++k) {
            const auto [p, q] = convergent(cf, k);
            const long prev = convergent(cf, k - 1).second.degree();
            EXPECT_EQ(q.degree(), static_cast<long>(k));
            const std::int64_t through = -(q.degree() + prev + 1);
            const LaurentSeries approx = series_of_quotient(p, q, through);
            for (std::int64_t e = -1; e >= through; --e) ASSERT_EQ(approx.coefficient(e), s.coefficient(e)) << k;
        }
    }
}

TEST(HankelLink, NonvanishingMinorsAndDegreeOneQuotientsAgree) {
    // Both facts are established independently: the minors by Bareiss, the quotients by the CF engine.
    for (SeriesId which : {SeriesId::L1, SeriesId::L2}) {
        const FamilyId h = which == SeriesId::L1 ? FamilyId::h1() : FamilyId::h2();
        for (std::size_t n = 1; n <= 20; ++n) EXPECT_NE(determinant(window(h, n)), 0);
        const CFExpansion cf = cf_expand(build_L(which, 41), 20);
        ASSERT_EQ(cf.partial_quotients.size(), 20u);
        for (const auto& q : cf.partial_quotients) EXPECT_EQ(q.degree(), 1);
    }
}

}  // namespace
}  // namespace binlab
