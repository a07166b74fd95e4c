#include "ospadmm/engine.hpp"

#include <cmath>
#include <random>

namespace ospadmm {

void validate_tau(double tau) {
    if (!(tau > 0.0 && tau < kGoldenRatio)) throw Error("tau out of range (0, (1+√5)/2)");
}

PsdOperator SolverConfig::S(std::size_t k) const {
    require(static_cast<bool>(s_schedule), "SolverConfig: missing S schedule");
    return s_schedule(k);
}

void SolverConfig::validate(const CouplingConstraint& cc) const {
    validate_tau(tau);
    require(sigma > 0.0 && std::isfinite(sigma), "sigma must be positive and finite");
    require(T.dim() == cc.z_dim(), "SolverConfig: T must act on the z space");
    require(static_cast<bool>(s_schedule), "SolverConfig: missing S schedule");
}

SSchedule constant_schedule(PsdOperator S) {
    return [S = std::move(S)](std::size_t) { return S; };
}

SolverState SolverState::initial(Vec x, Vec z, Vec y) {
    SolverState s;
    s.x = std::move(x);
    s.z = std::move(z);
    s.z_prev = s.z;
    s.y = std::move(y);
    s.k = 1;
    return s;
}

double aug_lagrangian(const Cost& f, const Regularizer& g, const CouplingConstraint& cc, double sigma,
                      const Vec& x, const Vec& z, const Vec& y) {
    require(sigma > 0.0, "aug_lagrangian: sigma must be positive");
    const double gz = g.value(z);
    if (gz == kInfinity) return kInfinity;
    const Vec r = cc.residual_vector(x, z);
    return f.value(x) + gz + y.dot(r) + 0.5 * sigma * r.squaredNorm();
}

Vec x_update(const Cost& f, const SolverState& state, const SolverConfig& config,
             const CouplingConstraint& cc) {
    const double sigma = config.sigma;
    const double p = config.prox_factor();
    const Mat S = config.S(state.k).matrix();
    require(S.rows() == cc.x_dim(), "x_update: S_k must act on the x space");
    const Mat& A = cc.A.matrix();
    const Mat H = sigma * A.transpose() * A + p * S;
    const Vec q = -A.transpose() * state.y - sigma * A.transpose() * (cc.B.apply(state.z) - cc.c) +
                  p * (S * state.x);
    return f.solve_x(H, q);
}

Vec z_update(const Regularizer& g, const Vec& x_new, const SolverState& state, const SolverConfig& config,
             const CouplingConstraint& cc) {
    const double sigma = config.sigma;
    const Mat& B = cc.B.matrix();
    const Mat H = sigma * B.transpose() * B + config.T.matrix();
    const Vec q = -B.transpose() * state.y - sigma * B.transpose() * (cc.A.apply(x_new) - cc.c) +
                  config.T.apply(state.z);
    return g.solve_z(H, q);
}

Vec dual_update(const SolverState& state, const SolverConfig& config, const CouplingConstraint& cc,
                const Vec& x_new, const Vec& z_new) {
    return state.y + config.tau * config.sigma * cc.residual_vector(x_new, z_new);
}

std::pair<SolverState, StepRecord> step(const Cost& f, const Regularizer& g, const CouplingConstraint& cc,
                                        const SolverState& state, const SolverConfig& config) {
    StepRecord rec;
    rec.x_new = x_update(f, state, config, cc);
    rec.z_new = z_update(g, rec.x_new, state, config, cc);
    rec.y_new = dual_update(state, config, cc, rec.x_new, rec.z_new);
    const double gz = g.value(rec.z_new);
    rec.loss = gz == kInfinity ? kInfinity : f.value(rec.x_new) + gz;
    rec.residual = residual(cc, rec.x_new, rec.z_new);

    SolverState next;
    next.x = rec.x_new;
    next.z = rec.z_new;
    next.z_prev = state.z;
    next.y = rec.y_new;
    next.k = state.k + 1;
    return {std::move(next), std::move(rec)};
}

double x_subproblem_value(const Cost& f, const SolverState& state, const SolverConfig& config,
                          const CouplingConstraint& cc, const Vec& x) {
    const Vec r = cc.residual_vector(x, state.z);
    const PsdOperator S = config.S(state.k);
    return f.value(x) + state.y.dot(r) + 0.5 * config.sigma * r.squaredNorm() +
           0.5 * config.prox_factor() * seminorm_sq(S, x - state.x);
}

double z_subproblem_value(const Regularizer& g, const Vec& x_new, const SolverState& state,
                          const SolverConfig& config, const CouplingConstraint& cc, const Vec& z) {
    const double gz = g.value(z);
    if (gz == kInfinity) return kInfinity;
    const Vec r = cc.residual_vector(x_new, z);
    return gz + state.y.dot(r) + 0.5 * config.sigma * r.squaredNorm() +
           0.5 * seminorm_sq(config.T, z - state.z);
}

namespace {

Vec random_unit(std::mt19937_64& eng, Eigen::Index n) {
    std::normal_distribution<double> nd;
    Vec d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = nd(eng);
    const double norm = d.norm();
    return norm > 0 ? Vec(d / norm) : d;
}

}  // namespace

double x_update_exactness(const Cost& f, const SolverState& state, const SolverConfig& config,
                          const CouplingConstraint& cc, const Vec& x_new, std::uint64_t seed, int samples,
                          double eps) {
    std::mt19937_64 eng(seed);
    const double base = x_subproblem_value(f, state, config, cc, x_new);
    double worst = kInfinity;
    for (int i = 0; i < samples; ++i) {
        const Vec d = random_unit(eng, x_new.size());
        worst = std::min(worst, x_subproblem_value(f, state, config, cc, x_new + eps * d) - base);
    }
    return worst;
}

double z_update_exactness(const Regularizer& g, const Vec& x_new, const SolverState& state,
                          const SolverConfig& config, const CouplingConstraint& cc, const Vec& z_new,
                          std::uint64_t seed, int samples, double eps) {
    std::mt19937_64 eng(seed);
    const double base = z_subproblem_value(g, x_new, state, config, cc, z_new);
    double worst = kInfinity;
    for (int i = 0; i < samples; ++i) {
        const Vec d = random_unit(eng, z_new.size());
        const Vec zp = g.feasible_perturbation(z_new, d, eps);
        worst = std::min(worst, z_subproblem_value(g, x_new, state, config, cc, zp) - base);
    }
    return worst;
}

const Iterate& Trajectory::at(std::size_t k) const {
    require(!iterates.empty(), "Trajectory: empty");
    const std::size_t idx = k == 0 ? 0 : k - 1;
    require(idx < iterates.size(), "Trajectory: iterate index out of range");
    return iterates[idx];
}

Trajectory run_offline(const OfflineProblem& problem, const SolverConfig& config, const SolverState& init,
                       std::size_t iterations) {
    config.validate(problem.cc);
    Trajectory traj;
    traj.iterates.reserve(iterations + 1);
    traj.iterates.push_back({init.x, init.z, init.y});
    SolverState state = init;
    for (std::size_t i = 0; i < iterations; ++i) {
        auto [next, rec] = step(*problem.f, *problem.g, problem.cc, state, config);
        state = std::move(next);
        traj.iterates.push_back({state.x, state.z, state.y});
    }
    return traj;
}

}  // namespace ospadmm
