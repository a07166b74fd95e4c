#include "ospadmm/online.hpp"

#include <cmath>

namespace ospadmm {

double objective_regret(const RegretLog& log, double nu_star, std::size_t N) {
    require(log.size() >= N, "objective_regret: log shorter than N");
    double sum = 0.0;
    for (std::size_t t = 0; t < N; ++t) {
        if (log.rounds[t].loss == kInfinity) return kInfinity;
        sum += log.rounds[t].loss;
    }
    return sum - static_cast<double>(N) * nu_star;
}

double constraint_regret(const RegretLog& log) {
    double sum = 0.0;
    for (const auto& r : log.rounds) sum += r.residual_sq;
    return sum;
}

double default_sigma(std::size_t N) { return std::sqrt(static_cast<double>(N)); }

OnlineRun run_online(const OnlineStream& stream, const Regularizer& g, const CouplingConstraint& cc,
                     const SolverConfig& config, const SolverState& init, Stepper stepper) {
    config.validate(cc);
    require(init.x.size() == cc.x_dim() && init.z.size() == cc.z_dim() && init.y.size() == cc.y_dim(),
            "run_online: initial state dimensions do not match the constraint");
    if (!stepper) {
        stepper = [&](const Cost& f, const SolverState& s) { return step(f, g, cc, s, config); };
    }

    OnlineRun run;
    const std::size_t N = stream.horizon();
    run.log.rounds.reserve(N);
    run.trajectory.iterates.reserve(N + 1);
    run.trajectory.iterates.push_back({init.x, init.z, init.y});

    SolverState state = init;
    double cum_loss = 0.0;
    double cum_ctr = 0.0;
    for (std::size_t t = 1; t <= N; ++t) {
        try {
            const CostPtr f = stream.cost(t);
            RoundRecord rec;
            rec.round = t;
            const double gz = g.value(state.z);
            rec.loss = gz == kInfinity ? kInfinity : f->value(state.x) + gz;
            rec.residual_sq = cc.residual_vector(state.x, state.z).squaredNorm();
            rec.subgrad_sq = f->subgradient(state.x).squaredNorm();
            cum_loss += rec.loss;
            cum_ctr += rec.residual_sq;
            rec.cum_loss = cum_loss;
            rec.cum_ctr = cum_ctr;
            run.log.rounds.push_back(rec);

            auto [next, step_rec] = stepper(*f, state);
            state = std::move(next);
            run.trajectory.iterates.push_back({state.x, state.z, state.y});
        } catch (const Error& e) {
            run.error = "round " + std::to_string(t) + ": " + e.what();
            break;
        }
    }
    return run;
}

}  // namespace ospadmm
