#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ospadmm/linalg.hpp"

using namespace ospadmm;

namespace {

Mat random_psd(std::mt19937_64& rng, Eigen::Index n, Eigen::Index rank) {
    std::normal_distribution<double> nd;
    Mat R(rank, n);
    for (Eigen::Index i = 0; i < R.size(); ++i) R.data()[i] = nd(rng);
    return R.transpose() * R;
}

Vec random_vec(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> nd;
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(rng);
    return v;
}

}  // namespace

TEST(Seminorm, IdentityIsEuclidean) {
    EXPECT_DOUBLE_EQ(seminorm(PsdOperator::identity(2), Vec::Map(std::vector<double>{3, 4}.data(), 2)), 5.0);
}

TEST(Seminorm, ZeroOperatorAnnihilates) {
    Vec v(2);
    v << 7, -7;
    EXPECT_EQ(seminorm(PsdOperator::zero(2), v), 0.0);
}

TEST(Seminorm, DiagonalOperator) {
    Vec d(2), v(2);
    d << 2, 0;
    v << 1, 1;
    // ⟨v, Bv⟩ = 2·1 + 0·1
    EXPECT_NEAR(seminorm(PsdOperator::diagonal(d), v), std::sqrt(2.0), 1e-15);
}

TEST(Seminorm, DimensionMismatchThrows) {
    EXPECT_THROW(seminorm(PsdOperator::identity(2), Vec::Zero(3)), Error);
}

TEST(Seminorm, RejectsIndefiniteInput) {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    EXPECT_THROW(PsdOperator{m}, Error);
}

TEST(Seminorm, ParallelogramConsistency) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const PsdOperator B(random_psd(rng, 5, 3));
        const Vec v = random_vec(rng, 5), w = random_vec(rng, 5);
        const double lhs = seminorm_sq(B, v) + seminorm_sq(B, w) - 2.0 * bilinear(B, v, w);
        const double rhs = seminorm_sq(B, v - w);
        EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Seminorm, VanishesOnKernel) {
    std::mt19937_64 rng(5);
    Mat R(2, 4);
    for (Eigen::Index i = 0; i < R.size(); ++i) R.data()[i] = std::normal_distribution<double>()(rng);
    const PsdOperator B(Mat(R.transpose() * R));
    Eigen::FullPivLU<Mat> lu(R);
    const Mat K = lu.kernel();
    for (Eigen::Index j = 0; j < K.cols(); ++j) EXPECT_NEAR(seminorm(B, K.col(j)), 0.0, 1e-7);
}

TEST(DistB, NearestPoint) {
    std::vector<Vec> pts{Vec::Constant(1, 3.0), Vec::Constant(1, -1.0)};
    EXPECT_DOUBLE_EQ(dist_B(PsdOperator::identity(1), Vec::Zero(1), pts), 1.0);
}

TEST(DistB, ZeroOperator) {
    std::vector<Vec> pts{Vec::Constant(2, 9.0), Vec::Constant(2, -4.0)};
    EXPECT_EQ(dist_B(PsdOperator::zero(2), Vec::Constant(2, 1.5), pts), 0.0);
}

TEST(DistB, WeightedCandidates) {
    Vec d(2);
    d << 1, 4;
    Vec e1 = Vec::Zero(2), e2 = Vec::Zero(2);
    e1(0) = 1;
    e2(1) = 1;
    std::vector<Vec> pts{e1, e2};
    // candidates have seminorms 1 and 2
    EXPECT_DOUBLE_EQ(dist_B(PsdOperator::diagonal(d), Vec::Zero(2), pts), 1.0);
}

TEST(DistB, EmptySetThrows) {
    std::vector<Vec> pts;
    EXPECT_THROW(dist_B(PsdOperator::identity(1), Vec::Zero(1), pts), Error);
}

TEST(Loewner, Examples) {
    EXPECT_TRUE(loewner_geq(PsdOperator::identity(3, 2.0), PsdOperator::identity(3), 1e-10));
    EXPECT_TRUE(loewner_geq(PsdOperator::identity(3), PsdOperator::identity(3), 1e-10));
    Vec a(2), b(2);
    a << 1, 0;
    b << 0, 1;
    EXPECT_FALSE(loewner_geq(PsdOperator::diagonal(a), PsdOperator::diagonal(b), 1e-10));
    EXPECT_THROW(loewner_geq(PsdOperator::identity(2), PsdOperator::identity(3), 1e-10), Error);
}

TEST(Loewner, PartialOrderOnRandomTriples) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat P = random_psd(rng, 4, 4);
        const Mat D1 = random_psd(rng, 4, 2), D2 = random_psd(rng, 4, 2);
        const PsdOperator a(P), b(Mat(P + D1)), c(Mat(P + D1 + D2));
        EXPECT_TRUE(loewner_geq(a, a, 1e-10));
        EXPECT_TRUE(loewner_geq(b, a, 1e-10));
        EXPECT_TRUE(loewner_geq(c, b, 1e-10));
        EXPECT_TRUE(loewner_geq(c, a, 1e-10));
        // antisymmetry: both directions only when the difference vanishes
        if (loewner_geq(a, b, 1e-10)) EXPECT_LT(D1.norm(), 1e-8);
    }
}

TEST(PositiveDefinite, Examples) {
    EXPECT_TRUE(positive_definite(PsdOperator::identity(3), 1e-12));
    EXPECT_FALSE(positive_definite(PsdOperator::zero(2), 1e-12));
    Vec d(2);
    d << 1e-6, 2;
    EXPECT_TRUE(positive_definite(PsdOperator::diagonal(d), 1e-12));
}

TEST(LinearMap, AdjointInvolution) {
    std::mt19937_64 rng(1);
    Mat m(3, 5);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = std::normal_distribution<double>()(rng);
    const LinearMap A(m);
    EXPECT_EQ(A.adjoint().adjoint().matrix(), m);
}

TEST(SolvePd, RejectsSingular) {
    EXPECT_THROW(solve_positive_definite(Mat::Zero(2, 2), Vec::Ones(2), "probe"), Error);
}
