#include <random>

#include <gtest/gtest.h>

#include "binlab/exact_matrix.hpp"
#include "binlab/families.hpp"
#include "binlab/serialize.hpp"
#include "oracles.hpp"

namespace binlab {
namespace {

TEST(Window, PascalAndModTwoExamples) {
    EXPECT_EQ(window(FamilyId::p1(1), 1, 1, 0), (ExactMatrix{{1}}));
    EXPECT_EQ(window(FamilyId::p1(1), 2, 2, 1), (ExactMatrix{{1, 1}, {1, 2}}));
    EXPECT_EQ(window(FamilyId::m2(), 2, 2, 0), (ExactMatrix{{1, 1}, {1, 0}}));
}

TEST(Window, RectangularAndEmpty) {
    const ExactMatrix w = window(FamilyId::p1(1), 2, 3, 4);
    ASSERT_EQ(w.rows(), 2u);
    ASSERT_EQ(w.cols(), 3u);
    EXPECT_EQ(w, (ExactMatrix{{1, 1, 1}, {4, 5, 6}}));
    EXPECT_EQ(window(FamilyId::p2(), 0).rows(), 0u);
}

TEST(MatMul, Examples) {
    EXPECT_EQ(mat_mul(ExactMatrix::identity(2), ExactMatrix::identity(2)), ExactMatrix::identity(2));
    const ExactMatrix j{{1, 1}, {0, 1}};
    EXPECT_EQ(mat_mul(j, j), (ExactMatrix{{1, 2}, {0, 1}}));
    const ExactMatrix m = window(FamilyId::m1(1), 2);
    EXPECT_EQ(mat_mul(m, m), window(FamilyId::m1(2), 2));
}

TEST(MatMul, DimensionMismatchThrows) {
    EXPECT_THROW(mat_mul(ExactMatrix(2, 3), ExactMatrix(2, 3)), std::invalid_argument);
}

TEST(MatMul, MatchesNaiveProduct) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactMatrix a = oracle::random_matrix(rng, 4, 5, -3, 3);
        const ExactMatrix b = oracle::random_matrix(rng, 5, 3, -3, 3);
        ExactMatrix naive(4, 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t l = 0; l < 5; ++l) naive(i, j) += a(i, l) * b(l, j);
        EXPECT_EQ(mat_mul(a, b), naive);
    }
}

TEST(MatPow, Examples) {
    const ExactMatrix j{{1, 1}, {0, 1}};
    EXPECT_EQ(mat_pow(j, 3), (ExactMatrix{{1, 3}, {0, 1}}));
    EXPECT_EQ(mat_pow(j, 0), ExactMatrix::identity(2));
    EXPECT_EQ(mat_pow(j, -1), (ExactMatrix{{1, -1}, {0, 1}}));
    EXPECT_EQ(mat_pow(ExactMatrix{{2, 1}, {1, 1}}, 0), ExactMatrix::identity(2));
}

TEST(MatPow, NegativePowersOfLowerAndSignedDiagonals) {
    const ExactMatrix lower{{-1, 0, 0}, {2, 1, 0}, {5, -3, -1}};
    EXPECT_EQ(mat_mul(mat_pow(lower, -1), lower), ExactMatrix::identity(3));
    EXPECT_EQ(mat_mul(mat_pow(lower, -3), mat_pow(lower, 3)), ExactMatrix::identity(3));
}

TEST(MatPow, NegativePowerNeedsUnimodularTriangular) {
    EXPECT_THROW(mat_pow(ExactMatrix{{2, 1}, {0, 1}}, -1), std::domain_error);
    EXPECT_THROW(mat_pow(ExactMatrix{{1, 1}, {1, 1}}, -2), std::domain_error);
    EXPECT_THROW(mat_pow(ExactMatrix(2, 3), 2), std::invalid_argument);
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(window(FamilyId::p2(), 4)), 1);
    EXPECT_EQ(determinant(window(FamilyId::m2(), 2)), -1);
    EXPECT_EQ(determinant(ExactMatrix(0, 0)), 1);
    EXPECT_EQ(determinant(ExactMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(ExactMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, NonSquareThrows) { EXPECT_THROW(determinant(ExactMatrix(2, 3)), std::invalid_argument); }

TEST(Determinant, AgreesWithCofactorExpansion) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = size(rng);
        const ExactMatrix a = oracle::random_matrix(rng, n, n, -9, 9);
        EXPECT_EQ(determinant(a), oracle::cofactor_determinant(a)) << "trial " << trial;
    }
}

TEST(Determinant, IsMultiplicative) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const ExactMatrix a = oracle::random_matrix(rng, n, n, -4, 4);
        const ExactMatrix b = oracle::random_matrix(rng, n, n, -4, 4);
        EXPECT_EQ(determinant(mat_mul(a, b)), determinant(a) * determinant(b));
    }
}

TEST(Truncation, TriangularWindowsAreMultiplicative) {
    for (const auto& [fa, fb] : {std::pair{FamilyId::p1(2), FamilyId::p1(-3)}, std::pair{FamilyId::m1(3), FamilyId::m1(-1)},
                                 std::pair{FamilyId::m1(2), FamilyId::p1(1)}}) {
        const ExactMatrix big = mat_mul(window(fa, 64), window(fb, 64));
        for (std::size_t n : {1, 2, 7, 16, 33, 64})
            EXPECT_EQ(big.leading(n, n), mat_mul(window(fa, n), window(fb, n))) << format_family(fa) << " n=" << n;
    }
}

TEST(Ldu, Examples) {
    const LDUFactors id = ldu_decompose(ExactMatrix::identity(3));
    EXPECT_EQ(id.L, RationalMatrix::identity(3));
    EXPECT_EQ(id.U, RationalMatrix::identity(3));
    EXPECT_EQ(id.D, (std::vector<Rational>{1, 1, 1}));

    const LDUFactors h = ldu_decompose(window(FamilyId::h1(), 2));
    EXPECT_EQ(h.D, (std::vector<Rational>{1, -1}));

    for (std::size_t n = 1; n <= 16; ++n)
        for (const auto& d : ldu_decompose(window(FamilyId::m2(), n)).D) EXPECT_TRUE(d == 1 || d == -1);
}

TEST(Ldu, EmptyMatrix) {
    const LDUFactors f = ldu_decompose(ExactMatrix(0, 0));
    EXPECT_TRUE(f.D.empty());
    EXPECT_EQ(f.L.rows(), 0u);
}

TEST(Ldu, ReportsOrderOfVanishingMinor) {
    try {
        ldu_decompose(ExactMatrix{{1, 2, 0}, {2, 4, 1}, {0, 1, 1}});
        FAIL() << "expected SingularMinorError";
    } catch (const SingularMinorError& e) {
        EXPECT_EQ(e.order(), 2u);
    }
    EXPECT_THROW(ldu_decompose(ExactMatrix{{0, 1}, {1, 0}}), SingularMinorError);
}

TEST(Ldu, PivotsAreMinorQuotientsAndProductReproduces) {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 50) {
        const std::size_t n = 1 + tested % 5;
        const ExactMatrix a = oracle::random_matrix(rng, n, n, -6, 6);
        LDUFactors f;
        try {
            f = ldu_decompose(a);
        } catch (const SingularMinorError&) {
            continue;
        }
        EXPECT_EQ(f.product(), to_rational(a));
        EXPECT_TRUE(f.L.is_lower_triangular());
        EXPECT_TRUE(f.U.is_upper_triangular());
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_EQ(f.L(k, k), 1);
            EXPECT_EQ(f.U(k, k), 1);
            Rational quotient(determinant(a.leading(k + 1, k + 1)), determinant(a.leading(k, k)));
            quotient.canonicalize();
            EXPECT_EQ(f.D[k], quotient);
        }
        ++tested;
    }
}

TEST(RankModP, Examples) {
    EXPECT_EQ(rank_mod_p(ExactMatrix::identity(3), 5), 3u);
    EXPECT_EQ(rank_mod_p(ExactMatrix{{1, 0, 0}, {1, 1, 1}, {1, 2, 2}}, 3), 2u);
    EXPECT_EQ(rank_mod_p(ExactMatrix{{2, 4}, {1, 2}}, 2), 1u);
    EXPECT_EQ(rank_mod_p(ExactMatrix{{2, 4}, {6, 8}}, 2), 0u);
    EXPECT_EQ(rank_mod_p(ExactMatrix{{-1, 3}, {4, 1}}, 13), 1u);
}

TEST(RankModP, RejectsNonPrime) {
    EXPECT_THROW(rank_mod_p(ExactMatrix::identity(2), 4), std::invalid_argument);
    EXPECT_THROW(rank_mod_p(ExactMatrix::identity(2), 1), std::invalid_argument);
}

TEST(RankModP, TransposeInvariant) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t p = std::array<std::uint64_t, 4>{2, 3, 5, 7}[trial % 4];
        const ExactMatrix a = oracle::random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 6, -3, 3);
        EXPECT_EQ(rank_mod_p(a, p), rank_mod_p(a.transpose(), p));
    }
}

TEST(RankModP, SquareRankMatchesDeterminantParity) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactMatrix a = oracle::random_matrix(rng, 4, 4, -2, 2);
        const bool full = rank_mod_p(a, 3) == 4;
        EXPECT_EQ(full, reduce_mod(determinant(a), 3) != 0);
    }
}

TEST(Serialize, JsonShape) {
    const ExactMatrix a{{-12, 0}, {3, 4}};
    const auto j = matrix_to_json(a);
    EXPECT_EQ(j.dump(), R"({"cols":2,"entries":[["-12","0"],["3","4"]],"rows":2})");
}

TEST(Serialize, RoundTripsPreserveBigEntries) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix a = oracle::random_matrix(rng, trial % 4, 3, -50, 50);
        if (a.rows() > 0) a(0, 0) *= parse_bigint("1000000000000000000000000000007");
        EXPECT_EQ(matrix_from_json(matrix_to_json(a)), a);
        if (a.rows() > 0) EXPECT_EQ(matrix_from_csv(matrix_to_csv(a)), a);
    }
}

TEST(Serialize, RejectsMalformedInput) {
    EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                 std::invalid_argument);
    EXPECT_THROW(matrix_from_csv("1,2\n3\n"), std::invalid_argument);
    EXPECT_THROW(parse_bigint("12a"), std::invalid_argument);
}

}  // namespace
}  // namespace binlab
