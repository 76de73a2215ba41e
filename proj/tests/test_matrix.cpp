#include <gtest/gtest.h>

#include <boost/rational.hpp>
#include <numbers>

#include "souriau/matrix.hpp"

using namespace souriau;
using Rational = boost::rational<long long>;

TEST(Matrix, ConstructionAndArithmetic) {
    const Mat a{{1, 2}, {3, 4}};
    const Mat b{{0, 1}, {1, 0}};
    EXPECT_EQ(a.dim(), 2);
    EXPECT_DOUBLE_EQ((a + b)(0, 1), 3.0);
    EXPECT_DOUBLE_EQ((a - b)(1, 0), 2.0);
    EXPECT_DOUBLE_EQ((a * 2.0)(1, 1), 8.0);
    EXPECT_DOUBLE_EQ((a * b)(0, 0), 2.0);  // row 0 of a dot col 0 of b
    EXPECT_DOUBLE_EQ(a.trace(), 5.0);
    EXPECT_DOUBLE_EQ(a.transpose()(0, 1), 3.0);
    EXPECT_DOUBLE_EQ(Mat::identity(3).trace(), 3.0);
    EXPECT_DOUBLE_EQ(Mat::zero(2).max_abs(), 0.0);
    EXPECT_THROW(Mat({{1, 2}}), std::domain_error);        // ragged/rectangular
    EXPECT_THROW(Mat({{1, std::nan("")}, {0, 0}}), std::domain_error);  // non-finite entry
}

TEST(Matrix, CommutatorIsAntisymmetricAndBilinear) {
    const Mat x{{0, -1}, {1, 0}};
    const Mat y{{0, 1}, {1, 0}};
    EXPECT_NEAR((commutator(x, y) + commutator(y, x)).max_abs(), 0.0, 0.0);
    EXPECT_NEAR((commutator(x, x)).max_abs(), 0.0, 0.0);
    const Mat lhs = commutator(x * 2.0 + y * 3.0, y);
    const Mat rhs = commutator(x, y) * 2.0 + commutator(y, y) * 3.0;
    EXPECT_NEAR((lhs - rhs).max_abs(), 0.0, 1e-14);
}

TEST(Matrix, PairingScales) {
    const Mat u{{0, -1}, {1, 0}};
    EXPECT_DOUBLE_EQ(pairing(u, u, PairingConvention::half()), 1.0);
    EXPECT_DOUBLE_EQ(pairing(u, u, PairingConvention::one()), 2.0);
    const Mat b = u * 3.0;
    EXPECT_DOUBLE_EQ(pairing(b, b, PairingConvention::half()), 9.0);  // <beta,beta> = a^2
}

TEST(Matrix, DeterminantAndInverse) {
    const Mat a{{2, 1}, {1, 1}};
    EXPECT_DOUBLE_EQ(determinant2or3(a), 1.0);
    EXPECT_NEAR((a * inverse2or3(a) - Mat::identity(2)).max_abs(), 0.0, 1e-14);
    const Mat b{{2, 0, 1}, {0, 1, 0}, {1, 0, 1}};
    EXPECT_DOUBLE_EQ(determinant2or3(b), 1.0);
    EXPECT_NEAR((inverse2or3(b) * b - Mat::identity(3)).max_abs(), 0.0, 1e-14);

    const Mat sing{{1, 2}, {2, 4}};
    try {
        inverse2or3(sing);
        FAIL() << "expected singular_matrix_error";
    } catch (const singular_matrix_error& e) {
        EXPECT_NEAR(e.det(), 0.0, 1e-14);
    }
}

TEST(Matrix, RationalArithmeticIsExact) {
    using RMat = Matrix<Rational>;
    const RMat u{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
    EXPECT_EQ(determinant2or3(u), Rational(1));
    const RMat b = u * Rational(1, 2);
    EXPECT_EQ(pairing(b, b, PairingConvention::half()), Rational(1, 4));
    EXPECT_EQ((inverse2or3(b) * b)(0, 0), Rational(1));
    EXPECT_EQ(commutator(u, u)(0, 1), Rational(0));
}

TEST(Matrix, SkewDetection) {
    EXPECT_TRUE(is_skew(Mat{{0, -2}, {2, 0}}));
    EXPECT_FALSE(is_skew(Mat{{1, 0}, {0, 1}}));
    EXPECT_TRUE(is_skew(Mat{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
}

TEST(Matrix, ExpOfPlanarRotationGenerator) {
    const Mat u{{0, -1}, {1, 0}};
    for (double t : {0.0, 0.3, 1.0, std::numbers::pi, 5.5}) {
        const Mat r = matrix_exp(u * t);
        EXPECT_NEAR(r(0, 0), std::cos(t), 1e-14);
        EXPECT_NEAR(r(1, 0), std::sin(t), 1e-14);
        EXPECT_NEAR((r.transpose() * r - Mat::identity(2)).max_abs(), 0.0, 1e-13);
        EXPECT_NEAR(determinant2or3(r), 1.0, 1e-13);
    }
}

TEST(Matrix, ExpOfSpatialRotationGenerator) {
    const Mat z3{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
    const double t = 0.7;
    const Mat r = matrix_exp(z3 * t);
    EXPECT_NEAR(r(0, 0), std::cos(t), 1e-14);
    EXPECT_NEAR(r(1, 0), std::sin(t), 1e-14);
    EXPECT_NEAR(r(2, 2), 1.0, 1e-14);
    EXPECT_NEAR((r.transpose() * r - Mat::identity(3)).max_abs(), 0.0, 1e-13);
}

TEST(Matrix, ExpSeriesFallbackMatchesClosedForm) {
    // exp(t e2) = diag(e^t, e^{-t}) -- not skew, exercises scaling-and-squaring
    const Mat e2{{1, 0}, {0, -1}};
    const Mat r = matrix_exp(e2 * 2.0);
    EXPECT_NEAR(r(0, 0), std::exp(2.0), 1e-11 * std::exp(2.0));
    EXPECT_NEAR(r(1, 1), std::exp(-2.0), 1e-11);
    EXPECT_NEAR(r(0, 1), 0.0, 1e-12);
    // exp(0) = I on the fallback path too
    EXPECT_NEAR((matrix_exp(Mat{{0, 0}, {0, 0}}) - Mat::identity(2)).max_abs(), 0.0, 0.0);
}

TEST(Matrix, SolveDense) {
    const std::vector<std::vector<double>> a = {{2, 1}, {1, 3}};
    const auto x = solve_dense(a, {5, 10});
    EXPECT_NEAR(x[0], 1.0, 1e-14);
    EXPECT_NEAR(x[1], 3.0, 1e-14);
    EXPECT_THROW(solve_dense({{1, 1}, {1, 1}}, {1, 2}), std::domain_error);
}
