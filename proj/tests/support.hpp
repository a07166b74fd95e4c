#pragma once

// Shared fixtures for the unit and acceptance tests.

#include "ospadmm/experiment.hpp"
#include "ospadmm/qp.hpp"

namespace ospadmm::testing {

inline QpGeneratorConfig qp_config(std::uint64_t seed, std::size_t N, Eigen::Index n = 5, Eigen::Index m = 3) {
    QpGeneratorConfig c;
    c.n = n;
    c.m = m;
    c.N = N;
    c.seed = seed;
    c.X = SimpleSet::box(n, -1.0, 1.0);
    return c;
}

/// σ = √N, the instance's S_t schedule, closed-form or generic stepping.
inline OnlineSetup qp_setup(const QpGeneratorConfig& gc, double tau, bool closed_form = true) {
    const auto inst = make_qp_instance(gc);
    const SolverConfig cfg = inst.solver_config(tau);
    OnlineSetup s{inst.stream, inst.g, inst.cc, cfg, inst.initial_state(), {}};
    if (closed_form) s.stepper = inst.closed_form_stepper(cfg);
    return s;
}

enum class Mutation { X, Z, Dual };

/// The generic update with one of the three formulas shifted by `delta` in every coordinate.
inline Stepper mutated_stepper(const OnlineSetup& setup, Mutation which, double delta) {
    const RegularizerPtr g = setup.g;
    const CouplingConstraint cc = setup.cc;
    const SolverConfig cfg = setup.config;
    return [=](const Cost& f, const SolverState& s) -> std::pair<SolverState, StepRecord> {
        StepRecord rec;
        rec.x_new = x_update(f, s, cfg, cc);
        if (which == Mutation::X) rec.x_new.array() += delta;
        rec.z_new = z_update(*g, rec.x_new, s, cfg, cc);
        if (which == Mutation::Z) rec.z_new.array() += delta;
        rec.y_new = dual_update(s, cfg, cc, rec.x_new, rec.z_new);
        if (which == Mutation::Dual) rec.y_new.array() += delta;
        const double gz = g->value(rec.z_new);
        rec.loss = gz == kInfinity ? kInfinity : f.value(rec.x_new) + gz;
        rec.residual = residual(cc, rec.x_new, rec.z_new);
        SolverState next{rec.x_new, rec.z_new, s.z, rec.y_new, s.k + 1};
        return {std::move(next), std::move(rec)};
    };
}

/// Worst relative slack over asserted checks with the given id (+∞ when none).
inline double worst_relative_slack(const std::vector<RoundCheck>& checks, const std::string& id) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : checks) {
        if (c.id != id || !c.asserted) continue;
        const double scale = std::max({1.0, std::abs(c.check.lhs), std::abs(c.check.rhs)});
        const double rel = std::isfinite(c.check.slack()) ? c.check.slack() / scale : -std::numeric_limits<double>::infinity();
        worst = std::min(worst, rel);
    }
    return worst;
}

}  // namespace ospadmm::testing
