#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ospadmm/engine.hpp"
#include "ospadmm/oracle.hpp"
#include "ospadmm/qp.hpp"

using namespace ospadmm;

namespace {

Mat m1(double a) { return Mat::Constant(1, 1, a); }
Vec s1(double a) { return Vec::Constant(1, a); }

SolverConfig scalar_config(double sigma, double tau, ProximalScaling scaling = ProximalScaling::Offline) {
    SolverConfig c;
    c.sigma = sigma;
    c.tau = tau;
    c.T = PsdOperator::zero(1);
    c.s_schedule = constant_schedule(PsdOperator::zero(1));
    c.scaling = scaling;
    return c;
}

}  // namespace

TEST(AugLagrangian, Examples) {
    const auto zero_f = QuadraticCost::linear(Vec::Zero(1));
    const ZeroRegularizer zero_g(1);
    const CouplingConstraint cc0(LinearMap::identity(1), LinearMap::identity(1), s1(0));
    EXPECT_EQ(aug_lagrangian(*zero_f, zero_g, cc0, 1.0, s1(0), s1(0), s1(0)), 0.0);

    const CouplingConstraint cc(LinearMap(m1(1)), LinearMap(m1(0)), s1(0));
    // ⟨y, x⟩ + (σ/2)x² = 2 + 1
    EXPECT_DOUBLE_EQ(aug_lagrangian(*zero_f, zero_g, cc, 2.0, s1(1), s1(0), s1(2)), 3.0);

    const AffineIndicator at_zero(m1(1), s1(0));
    EXPECT_EQ(aug_lagrangian(*zero_f, at_zero, cc, 1.0, s1(0), s1(1), s1(0)), kInfinity);
}

TEST(XUpdate, StationaryAtOrigin) {
    const QuadraticCost f(Mat::Zero(2, 2), Vec::Zero(2));
    const CouplingConstraint cc(LinearMap::identity(2), LinearMap(-Mat::Identity(2, 2)), Vec::Zero(2));
    SolverConfig config;
    config.sigma = 1.0;
    config.T = PsdOperator::zero(2);
    config.s_schedule = constant_schedule(PsdOperator::identity(2));
    const auto state = SolverState::initial(Vec::Zero(2), Vec::Zero(2), Vec::Zero(2));
    EXPECT_LT(x_update(f, state, config, cc).norm(), 1e-15);
}

TEST(XUpdate, ScalarPenaltyMinimum) {
    // ½x² + ½x² is minimized at 0
    const QuadraticCost f(m1(1), s1(0));
    const CouplingConstraint cc(LinearMap(m1(1)), LinearMap(m1(-1)), s1(0));
    const auto state = SolverState::initial(s1(3), s1(0), s1(0));
    EXPECT_NEAR(x_update(f, state, scalar_config(1, 1), cc)(0), 0.0, 1e-15);
}

TEST(XUpdate, ScalarStationaritySolve) {
    // f(x) = ½(x - 2)², y = 1, σ = 1: stationarity (x - 2) + y + σx = 0
    const double y = 1.0, sigma = 1.0;
    const double expected = (2.0 - y) / (1.0 + sigma);
    const QuadraticCost f(m1(1), s1(-2), 2.0);
    const CouplingConstraint cc(LinearMap(m1(1)), LinearMap(m1(0)), s1(0));
    const auto state = SolverState::initial(s1(0), s1(0), s1(y));
    EXPECT_NEAR(x_update(f, state, scalar_config(sigma, 1), cc)(0), expected, 1e-15);
}

TEST(XUpdate, SingularSubproblemRejected) {
    const QuadraticCost f(m1(0), s1(1));
    const CouplingConstraint cc(LinearMap(m1(0)), LinearMap(m1(1)), s1(0));
    const auto state = SolverState::initial(s1(0), s1(0), s1(0));
    try {
        x_update(f, state, scalar_config(1, 1), cc);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("non-unique x-subproblem"), std::string::npos);
    }
}

TEST(ZUpdate, Examples) {
    const CouplingConstraint cc(LinearMap(m1(1)), LinearMap(m1(-1)), s1(0));
    const auto state = SolverState::initial(s1(0), s1(0), s1(0));
    const auto config = scalar_config(1, 1);

    EXPECT_NEAR(z_update(ZeroRegularizer(1), s1(0.7), state, config, cc)(0), 0.7, 1e-15);
    EXPECT_NEAR(z_update(SetIndicator(SimpleSet::box(1, 0.0, 1.0)), s1(1.5), state, config, cc)(0), 1.0, 1e-15);
    // prox of |·| at 2 with weight 1/σ: soft threshold
    const double v = 2.0, w = 1.0;
    const double expected = std::copysign(std::max(std::abs(v) - w, 0.0), v);
    EXPECT_NEAR(z_update(L1Regularizer(1, 1.0), s1(v), state, config, cc)(0), expected, 1e-15);
}

TEST(DualUpdate, Examples) {
    SolverConfig config = scalar_config(2.0, 1.0);
    config.T = PsdOperator::zero(2);
    const CouplingConstraint cc(LinearMap::identity(2), LinearMap(Mat::Zero(2, 2)), Vec::Zero(2));
    auto state = SolverState::initial(Vec::Zero(2), Vec::Zero(2), Vec::Zero(2));
    Vec r(2);
    r << 1, -1;
    const Vec y = dual_update(state, config, cc, r, Vec::Zero(2));
    EXPECT_EQ(y(0), 2.0);
    EXPECT_EQ(y(1), -2.0);
    EXPECT_EQ(dual_update(state, config, cc, Vec::Zero(2), Vec::Zero(2)), Vec::Zero(2));

    const CouplingConstraint c1(LinearMap(m1(1)), LinearMap(m1(0)), s1(0));
    const auto st1 = SolverState::initial(s1(0), s1(0), s1(1));
    const double tau = 1.5, sigma = 2.0;
    EXPECT_DOUBLE_EQ(dual_update(st1, scalar_config(sigma, tau), c1, s1(0.5), s1(0))(0), 1.0 + tau * sigma * 0.5);
}

TEST(DualUpdate, AffineInResidual) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> nd;
    const CouplingConstraint cc(LinearMap::identity(3), LinearMap(Mat::Zero(3, 3)), Vec::Zero(3));
    SolverConfig config;
    config.sigma = 1.7;
    config.tau = 1.3;
    for (int trial = 0; trial < 20; ++trial) {
        Vec y(3), r1(3), r2(3);
        for (Eigen::Index i = 0; i < 3; ++i) y(i) = nd(rng), r1(i) = nd(rng), r2(i) = nd(rng);
        auto s = SolverState::initial(Vec::Zero(3), Vec::Zero(3), y);
        const Vec both = dual_update(s, config, cc, r1 + r2, Vec::Zero(3));
        s.y = dual_update(s, config, cc, r1, Vec::Zero(3));
        const Vec chained = dual_update(s, config, cc, r2, Vec::Zero(3));
        EXPECT_LT((both - chained).norm(), 1e-12);
    }
}

TEST(Tau, RangeValidation) {
    EXPECT_NO_THROW(validate_tau(1.617));
    EXPECT_THROW(validate_tau(0.0), Error);
    EXPECT_THROW(validate_tau(kGoldenRatio), Error);
    try {
        validate_tau(1.7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "tau out of range (0, (1+√5)/2)");
    }
}

TEST(Step, HandSimulatedOfflineStep) {
    // f = ½x², g ≡ 0, x - z = 0, σ = τ = 1 from (x, z, y) = (1, 1, 0):
    //   x⁺ solves x + y + σ(x - z) = 0, z⁺ = x⁺ + y/σ, y⁺ = y + τσ(x⁺ - z⁺)
    const double sigma = 1.0, tau = 1.0, z = 1.0, y = 0.0;
    const double x_plus = (sigma * z - y) / (1.0 + sigma);
    const double z_plus = x_plus + y / sigma;
    const double y_plus = y + tau * sigma * (x_plus - z_plus);

    const QuadraticCost f(m1(1), s1(0));
    const ZeroRegularizer g(1);
    const CouplingConstraint cc(LinearMap(m1(1)), LinearMap(m1(-1)), s1(0));
    const auto [next, rec] = step(f, g, cc, SolverState::initial(s1(1), s1(z), s1(y)), scalar_config(sigma, tau));
    EXPECT_NEAR(next.x(0), x_plus, 1e-15);
    EXPECT_NEAR(next.z(0), z_plus, 1e-15);
    EXPECT_NEAR(next.y(0), y_plus, 1e-15);
    EXPECT_EQ(next.z_prev(0), z);
    EXPECT_EQ(next.k, 2u);
    EXPECT_NEAR(rec.residual, std::abs(x_plus - z_plus), 1e-15);
}

TEST(Step, AllZeroQpRoundStaysZero) {
    const QuadraticCost f(Mat::Zero(2, 2), Vec::Zero(2));
    const SetIndicator g(SimpleSet::box(2, -1.0, 1.0));
    const CouplingConstraint cc(LinearMap::identity(2), LinearMap(-Mat::Identity(2, 2)), Vec::Zero(2));
    SolverConfig config;
    config.sigma = 1.0;
    config.T = PsdOperator::zero(2);
    config.s_schedule = constant_schedule(PsdOperator::identity(2));
    const auto [next, rec] = step(f, g, cc, SolverState::initial(Vec::Zero(2), Vec::Zero(2), Vec::Zero(2)), config);
    EXPECT_EQ(next.x, Vec::Zero(2));
    EXPECT_EQ(next.z, Vec::Zero(2));
    EXPECT_EQ(next.y, Vec::Zero(2));
    EXPECT_EQ(rec.loss, 0.0);
}

TEST(Step, KktTripleIsFixedPoint) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = make_offline_qp({.seed = seed, .quadratic_g = seed % 2 == 0});
        const KktTriple kkt = kkt_triple(inst.problem);
        ASSERT_LT(kkt.max_residual(), 1e-9);
        SolverConfig config = inst.solver_config(1.5, 1.2);
        config.T = PsdOperator::zero(inst.T.dim());
        config.s_schedule = constant_schedule(PsdOperator::zero(inst.S.dim()));
        const auto [next, rec] =
            step(*inst.problem.f, *inst.problem.g, inst.problem.cc, SolverState::initial(kkt.x, kkt.z, kkt.y), config);
        EXPECT_LT((next.x - kkt.x).norm(), 1e-10);
        EXPECT_LT((next.z - kkt.z).norm(), 1e-10);
        EXPECT_LT((next.y - kkt.y).norm(), 1e-10);
    }
}

TEST(Step, SubproblemSolutionsAreExact) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = make_offline_qp({.seed = seed, .quadratic_g = true});
        const auto config = inst.solver_config(2.0, 1.0);
        auto state = inst.feasible_start();
        state.y = Vec::LinSpaced(state.y.size(), -1.0, 1.0);
        const Vec xn = x_update(*inst.problem.f, state, config, inst.problem.cc);
        EXPECT_GE(x_update_exactness(*inst.problem.f, state, config, inst.problem.cc, xn, seed), -1e-10);
        const Vec zn = z_update(*inst.problem.g, xn, state, config, inst.problem.cc);
        EXPECT_GE(z_update_exactness(*inst.problem.g, xn, state, config, inst.problem.cc, zn, seed), -1e-10);
    }
    // indicator regularizer: perturbations stay inside the set
    const auto qp = make_qp_instance({.n = 4, .m = 2, .N = 16, .seed = 3, .X = SimpleSet::box(4, -1.0, 1.0)});
    const auto config = qp.solver_config(1.0);
    auto state = qp.initial_state();
    state.y = Vec::LinSpaced(state.y.size(), -2.0, 2.0);
    const auto f = qp.stream.cost(1);
    const Vec xn = x_update(*f, state, config, qp.cc);
    const Vec zn = z_update(*qp.g, xn, state, config, qp.cc);
    EXPECT_GE(z_update_exactness(*qp.g, xn, state, config, qp.cc, zn, 5), -1e-10);
}

TEST(Offline, ConvergesOnStronglyConvexQps) {
    for (double tau : {1.0, 1.618 - 1e-3}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto inst = make_offline_qp({.seed = seed, .quadratic_g = true});
            const auto opt = solve_offline(inst.problem, OracleMethod::AnalyticKkt);
            const auto traj = run_offline(inst.problem, inst.solver_config(1.0, tau), inst.feasible_start(), 5000);
            const auto& w = traj.at(traj.size());
            EXPECT_LT(residual(inst.problem.cc, w.x, w.z), 1e-6) << "tau " << tau << " seed " << seed;
            EXPECT_LT(std::abs(inst.problem.value(w.x, w.z) - opt.value), 1e-6) << "tau " << tau << " seed " << seed;
        }
    }
}
