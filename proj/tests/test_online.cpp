#include <gtest/gtest.h>

#include <cmath>

#include "ospadmm/online.hpp"
#include "ospadmm/oracle.hpp"
#include "ospadmm/qp.hpp"

using namespace ospadmm;

namespace {

RegretLog log_of(std::initializer_list<double> losses, std::initializer_list<double> residuals) {
    RegretLog log;
    auto r = residuals.begin();
    std::size_t t = 1;
    for (double l : losses) {
        RoundRecord rec;
        rec.round = t++;
        rec.loss = l;
        rec.residual_sq = r == residuals.end() ? 0.0 : *r * *r;
        if (r != residuals.end()) ++r;
        log.rounds.push_back(rec);
    }
    return log;
}

SolverConfig identity_config(Eigen::Index n, double sigma) {
    SolverConfig c;
    c.sigma = sigma;
    c.tau = 1.0;
    c.T = PsdOperator::zero(n);
    c.s_schedule = constant_schedule(PsdOperator::zero(n));
    return c;
}

double stationary_regret_per_round(std::size_t N) {
    Mat G(2, 2);
    G << 2, 0.5, 0.5, 1;
    Vec c(2);
    c << -1, 0.5;
    const CostPtr f = std::make_shared<QuadraticCost>(G, c);
    const OnlineStream stream(N, 0, 2, [f](std::size_t) { return f; });
    const auto g = std::make_shared<ZeroRegularizer>(2);
    const CouplingConstraint cc(LinearMap::identity(2), LinearMap(-Mat::Identity(2, 2)), Vec::Zero(2));
    const auto run = run_online(stream, *g, cc, identity_config(2, default_sigma(N)),
                                SolverState::initial(Vec::Constant(2, 3.0), Vec::Constant(2, 3.0), Vec::Zero(2)));
    const auto opt = solve_offline(averaged_problem(stream, g, cc), OracleMethod::AnalyticKkt);
    return objective_regret(run.log, opt.value, N) / static_cast<double>(N);
}

}  // namespace

TEST(Regret, ObjectiveExamples) {
    EXPECT_EQ(objective_regret(log_of({2, 2, 2}, {}), 2.0, 3), 0.0);
    EXPECT_EQ(objective_regret(log_of({1, 2, 3}, {}), 1.0, 3), 3.0);  // 6 - 3
    EXPECT_EQ(objective_regret(log_of({1, kInfinity}, {}), 0.0, 2), kInfinity);
}

TEST(Regret, ConstraintExamples) {
    EXPECT_EQ(constraint_regret(log_of({0, 0}, {0, 0})), 0.0);
    EXPECT_EQ(constraint_regret(log_of({0, 0}, {1, 0.5})), 1.25);
    EXPECT_EQ(constraint_regret(log_of({0}, {0.3})), 0.3 * 0.3);
}

TEST(RunOnline, ZeroProblemHasZeroRegret) {
    const OnlineStream stream(1, 0, 2, [](std::size_t) { return QuadraticCost::linear(Vec::Zero(2)); });
    const ZeroRegularizer g(2);
    const CouplingConstraint cc(LinearMap::identity(2), LinearMap(-Mat::Identity(2, 2)), Vec::Zero(2));
    const auto run =
        run_online(stream, g, cc, identity_config(2, 1.0), SolverState::initial(Vec::Zero(2), Vec::Zero(2), Vec::Zero(2)));
    ASSERT_FALSE(run.error);
    EXPECT_EQ(objective_regret(run.log, 0.0, 1), 0.0);
    EXPECT_EQ(constraint_regret(run.log), 0.0);
    EXPECT_EQ(run.trajectory.size(), 2u);
}

TEST(RunOnline, FirstRoundChargedAtInput) {
    const auto qp = make_qp_instance({.n = 3, .m = 2, .N = 5, .seed = 2, .X = SimpleSet::box(3, -1.0, 1.0)});
    auto init = qp.initial_state();
    init.x = Vec::Constant(3, 0.9);  // violates x = z
    const auto run = run_online(qp.stream, *qp.g, qp.cc, qp.solver_config(1.0), init);
    ASSERT_FALSE(run.error);
    EXPECT_EQ(run.log.rounds[0].residual_sq, qp.cc.residual_vector(init.x, init.z).squaredNorm());
    EXPECT_EQ(run.log.rounds[0].loss, qp.stream.cost(1)->value(init.x) + qp.g->value(init.z));
}

TEST(RunOnline, CumulativeColumnsArePrefixSums) {
    const auto qp = make_qp_instance({.n = 4, .m = 2, .N = 50, .seed = 5, .X = SimpleSet::box(4, -1.0, 1.0)});
    const auto run = run_online(qp.stream, *qp.g, qp.cc, qp.solver_config(1.3), qp.initial_state());
    double cl = 0.0, cc = 0.0;
    for (const auto& r : run.log.rounds) {
        cl += r.loss;
        cc += r.residual_sq;
        EXPECT_EQ(r.cum_loss, cl);
        EXPECT_EQ(r.cum_ctr, cc);
    }
    EXPECT_EQ(constraint_regret(run.log), cc);
}

TEST(RunOnline, StationaryStreamAverageRegretShrinks) {
    EXPECT_LT(stationary_regret_per_round(400), stationary_regret_per_round(100));
}

TEST(RunOnline, Deterministic) {
    const auto qp = make_qp_instance({.n = 4, .m = 2, .N = 60, .seed = 8, .X = SimpleSet::simplex(4)});
    const auto config = qp.solver_config(1.0);
    const auto a = run_online(qp.stream, *qp.g, qp.cc, config, qp.initial_state());
    const auto b = run_online(qp.stream, *qp.g, qp.cc, config, qp.initial_state());
    ASSERT_EQ(a.log.size(), b.log.size());
    for (std::size_t i = 0; i < a.log.size(); ++i) {
        EXPECT_EQ(a.log.rounds[i].loss, b.log.rounds[i].loss);
        EXPECT_EQ(a.log.rounds[i].residual_sq, b.log.rounds[i].residual_sq);
    }
    for (std::size_t k = 1; k <= a.trajectory.size(); ++k) EXPECT_EQ(a.trajectory.at(k).y, b.trajectory.at(k).y);
}

TEST(RunOnline, StepErrorKeepsPartialLog) {
    // A = 0 and S = 0 leave the x-subproblem singular on the first step
    const OnlineStream stream(3, 0, 1, [](std::size_t) { return QuadraticCost::linear(Vec::Ones(1)); });
    const ZeroRegularizer g(1);
    const CouplingConstraint cc(LinearMap(Mat::Zero(1, 1)), LinearMap::identity(1), Vec::Zero(1));
    const auto run = run_online(stream, g, cc, identity_config(1, 1.0),
                                SolverState::initial(Vec::Zero(1), Vec::Zero(1), Vec::Zero(1)));
    EXPECT_TRUE(run.error.has_value());
    EXPECT_EQ(run.log.size(), 1u);
}
