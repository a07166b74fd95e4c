#include "ospadmm/experiment.hpp"

#include <algorithm>
#include <cmath>

namespace ospadmm {

OfflineOptimum solve_reference(const OfflineProblem& problem) {
    if (problem.g->analytic() && problem.f->quadratic_form()) {
        try {
            return solve_offline(problem, OracleMethod::AnalyticKkt);
        } catch (const Error&) {
            // singular saddle system: fall through to the iterative oracle
        }
    }
    try {
        return solve_offline(problem, OracleMethod::ConvergedSpadmm);
    } catch (const OracleNotConverged&) {
        throw;
    } catch (const Error&) {
        // non-unique optimum: any certified minimizer is a valid representative
        if (!problem.g->analytic() || !problem.f->quadratic_form()) throw;
        OfflineOptimum out;
        out.kkt = kkt_triple_min_norm(problem);
        out.x = out.kkt.x;
        out.z = out.kkt.z;
        out.value = problem.value(out.x, out.z);
        return out;
    }
}

namespace {

bool is_zero(const PsdOperator& op) { return op.matrix().isZero(0.0); }

double quad(const Mat& M, const Vec& v) { return v.dot(M * v); }

std::vector<std::string> collect_failures(const std::vector<RoundCheck>& checks, const std::vector<BoundRecord>& bounds,
                                          const std::string& error, double tol) {
    std::vector<std::string> out;
    if (!error.empty()) out.push_back("error");
    for (const auto& c : checks)
        if (c.asserted && !c.check.passes(tol)) out.push_back(std::to_string(c.round) + ":" + c.id);
    for (const auto& b : bounds)
        if (b.evaluated && b.asserted && !b.check.passes(tol)) out.push_back(b.id);
    return out;
}

void push_round_checks(std::vector<RoundCheck>& out, const std::vector<RoundSlacks>& slacks, bool sigma_zero,
                       bool round1) {
    for (const auto& s : slacks) {
        const bool ready = s.round > 1 || round1;
        out.push_back({s.round, "descent", s.descent, sigma_zero && ready});
        out.push_back({s.round, "theorem", s.theorem, ready});
        out.push_back({s.round, "hbar_dominance", s.hbar_dominance, true});
    }
}

void require_feasible(const CouplingConstraint& cc, const OfflineOptimum& opt, double tol) {
    const double r = residual(cc, opt.x, opt.z);
    require(r <= tol * std::max(1.0, cc.c.norm()),
            "oracle representative infeasible (residual " + std::to_string(r) + ")");
}

}  // namespace

std::vector<std::string> OnlineAudit::failures(double tol) const {
    auto out = collect_failures(checks, bounds, error, tol);
    if (!pd_equivalence_round1) out.insert(out.begin(), "pd_equivalence");
    return out;
}

std::vector<std::string> OfflineAudit::failures(double tol) const {
    auto out = collect_failures(checks, bounds, error, tol);
    if (!potentials_monotone) out.push_back("fejer_potential_monotone");
    return out;
}

OnlineAudit audit_online_trajectory(const OnlineSetup& setup, const Trajectory& traj, const RegretLog& log,
                                    const AuditOptions& options) {
    OnlineAudit a;
    try {
        const std::size_t N = setup.stream.horizon();
        a.N = N;
        require(N >= 1, "audit: empty horizon");
        require(traj.size() >= N + 1, "audit: trajectory has fewer than N+1 iterates");
        require(log.size() == N, "audit: regret log does not cover N rounds");
        const auto& cc = setup.cc;
        const auto& g = *setup.g;
        const auto& config = setup.config;

        std::vector<CostPtr> costs;
        for (std::size_t k = 1; k <= N; ++k) costs.push_back(setup.stream.cost(k));
        std::vector<PsdOperator> S;
        for (std::size_t k = 1; k <= N + 1; ++k) S.push_back(config.S(k));

        a.optimum = solve_reference(averaged_problem(setup.stream, setup.g, cc));
        require_feasible(cc, a.optimum, options.feasibility_tol);
        const RoundContext ctx{setup.g.get(), &cc, config, a.optimum.x, a.optimum.z};

        a.regret_obj = objective_regret(log, a.optimum.value, N);
        a.regret_ctr = constraint_regret(log);

        const auto& w1 = traj.at(1);
        a.consistent_start = consistent_start_residual(ctx, w1.x, w1.z, w1.y, traj.z_before(1));
        a.round1_asserted = a.consistent_start <= 1e-8;
        a.sigma_zero = is_zero(g.sigma_op()) &&
                       std::all_of(costs.begin(), costs.end(), [](const CostPtr& f) { return is_zero(f->sigma_op()); });

        const auto rounds = collect_rounds(traj, costs, config);
        const auto slacks = options.parallel ? audit_rounds_parallel(ctx, rounds) : audit_rounds_serial(ctx, rounds);
        push_round_checks(a.checks, slacks, a.sigma_zero, a.round1_asserted);

        const auto bundle = assemble_operators(config, S[0], costs[0]->sigma_op(), g.sigma_op(), cc);
        a.pd_equivalence_round1 = bundle.pd_equivalence();
        a.cert = certify_assumptions(ctx, traj, costs, S);

        const auto tc = tau_constants(config.tau);
        const double sigma = config.sigma;
        const Mat E = cc.stacked();
        const Mat& B = cc.B.matrix();
        const Vec w_hat = concat(a.optimum.x, a.optimum.z);
        const Vec w1_vec = concat(w1.x, w1.z);

        OnlineBoundInputs in;
        in.N = N;
        in.sigma = sigma;
        in.tc = tc;
        in.y1_sq = w1.y.squaredNorm();
        in.z_hist_T = seminorm_sq(config.T, w1.z - traj.z_before(1));
        in.g_z1 = g.value(w1.z);
        in.g_zN1 = g.value(traj.at(N + 1).z);
        in.dist_sq = (w1_vec - w_hat).squaredNorm();
        in.dist_Mbar_sq = seminorm_sq(bundle.M_bar, w1_vec - w_hat);
        in.dist_Mhat_sq = seminorm_sq(bundle.M_hat, w1_vec - w_hat);
        in.norm_sigma_f1 = costs[0]->sigma_op().spectral_norm();
        in.norm_T_sigma_g = spectral_norm_symmetric(config.T.matrix() + g.sigma_op().matrix());
        in.norm_EE = spectral_norm_symmetric(E.transpose() * E);
        in.norm_S1 = S[0].spectral_norm();
        in.norm_BB = spectral_norm_symmetric(B.transpose() * B);
        in.norm_T = config.T.spectral_norm();
        in.cert = a.cert;
        in.sigma_is_sqrtN = std::abs(sigma - std::sqrt(static_cast<double>(N))) <= 1e-12 * sigma;

        double ctr_shifted = 0.0, sol = 0.0;
        const Mat EE = E.transpose() * E;
        for (std::size_t k = 1; k <= N; ++k) {
            const auto& wn = traj.at(k + 1);
            ctr_shifted += cc.residual_vector(wn.x, wn.z).squaredNorm();
            const Vec dw = concat(wn.x, wn.z) - w_hat;
            const Mat W = block_diag(costs[k - 1]->sigma_op().matrix(), g.sigma_op().matrix()) +
                          0.5 * tc.t * sigma * EE;
            sol += quad(W, dw);
        }
        const double Nd = static_cast<double>(N);
        in.obj_regret_avg = a.regret_obj / Nd;
        in.ctr_avg_shifted = ctr_shifted / Nd;
        in.ctr_avg = a.regret_ctr / Nd;
        in.solution_regret_avg = sol / Nd;
        a.bounds = evaluate_online_bounds(in);
    } catch (const std::exception& e) {
        a.error = e.what();
    }
    return a;
}

OnlineExperiment run_online_experiment(const OnlineSetup& setup, const AuditOptions& options) {
    OnlineExperiment ex;
    ex.run = run_online(setup.stream, *setup.g, setup.cc, setup.config, setup.init, setup.stepper);
    if (ex.run.error) {
        ex.audit.N = setup.stream.horizon();
        ex.audit.error = *ex.run.error;
        return ex;
    }
    ex.audit = audit_online_trajectory(setup, ex.run.trajectory, ex.run.log, options);
    return ex;
}

OfflineAudit audit_offline_trajectory(const OfflineSetup& setup, const Trajectory& traj, const AuditOptions& options) {
    OfflineAudit a;
    try {
        const std::size_t N = setup.iterations;
        a.N = N;
        require(N >= 1, "audit: no iterations");
        require(traj.size() >= N + 1, "audit: trajectory has fewer than N+1 iterates");
        const auto& problem = setup.problem;
        const auto& cc = problem.cc;
        const auto& g = *problem.g;
        const auto& config = setup.config;

        a.optimum = solve_reference(problem);
        require_feasible(cc, a.optimum, options.feasibility_tol);
        require(a.optimum.kkt.max_residual() <= 1e-8, "uncertified KKT triple (max residual " +
                                                          std::to_string(a.optimum.kkt.max_residual()) + ")");
        const RoundContext ctx{problem.g.get(), &cc, config, a.optimum.x, a.optimum.z};
        const std::vector<CostPtr> costs(N, problem.f);

        const auto& w1 = traj.at(1);
        a.consistent_start = consistent_start_residual(ctx, w1.x, w1.z, w1.y, traj.z_before(1));
        a.round1_asserted = a.consistent_start <= 1e-8;
        a.sigma_zero = is_zero(g.sigma_op()) && is_zero(problem.f->sigma_op());

        const auto rounds = collect_rounds(traj, costs, config);
        const auto slacks = options.parallel ? audit_rounds_parallel(ctx, rounds) : audit_rounds_serial(ctx, rounds);
        push_round_checks(a.checks, slacks, a.sigma_zero, a.round1_asserted);

        const Vec& y_bar = a.optimum.kkt.y;
        for (std::size_t k = 1; k <= N; ++k) {
            const auto& r = rounds[k - 1];
            a.checks.push_back({k, "fejer", check_fejer_recovery(ctx, r, y_bar), k > 1 || a.round1_asserted});
            a.potentials.push_back(fejer_potential(ctx, r, y_bar));
        }
        {
            RoundData last = rounds.back();
            last.x = last.x_next;
            last.z = last.z_next;
            last.y = last.y_next;
            last.z_prev = rounds.back().z;
            a.potentials.push_back(fejer_potential(ctx, last, y_bar));
        }
        for (std::size_t i = a.round1_asserted ? 1 : 2; i < a.potentials.size(); ++i) {
            const double prev = a.potentials[i - 1];
            if (a.potentials[i] > prev + options.tol * std::max(1.0, std::abs(prev))) a.potentials_monotone = false;
        }

        const auto tc = tau_constants(config.tau);
        const Mat E = cc.stacked();
        const Mat& B = cc.B.matrix();
        const double nu = a.optimum.value;
        OfflineBoundInputs in;
        in.N = N;
        in.sigma = config.sigma;
        in.tc = tc;
        in.y1_sq = w1.y.squaredNorm();
        in.z_hist_T = seminorm_sq(config.T, w1.z - traj.z_before(1));
        in.F1 = problem.value(w1.x, w1.z);
        in.FN1 = problem.value(traj.at(N + 1).x, traj.at(N + 1).z);
        in.nu_star = nu;
        in.r1_sq = cc.residual_vector(w1.x, w1.z).squaredNorm();
        in.dist_sq = (concat(w1.x, w1.z) - concat(a.optimum.x, a.optimum.z)).squaredNorm();
        in.norm_BB = spectral_norm_symmetric(B.transpose() * B);
        in.norm_S_sigma_f = spectral_norm_symmetric(config.S(1).matrix() + problem.f->sigma_op().matrix());
        in.norm_T_sigma_g = spectral_norm_symmetric(config.T.matrix() + g.sigma_op().matrix());
        in.norm_EE = spectral_norm_symmetric(E.transpose() * E);
        double obj = 0.0, ctr = 0.0;
        for (std::size_t k = 1; k <= N + 1; ++k) {
            const auto& w = traj.at(k);
            const double F = problem.value(w.x, w.z);
            if (k <= N) {
                obj += F - nu;
                ctr += cc.residual_vector(w.x, w.z).squaredNorm();
                if (std::isfinite(F)) in.gamma0 = std::max(in.gamma0, nu - F);
            }
            if (k >= 2 && std::isfinite(F)) in.gamma0_next = std::max(in.gamma0_next, nu - F);
        }
        const double Nd = static_cast<double>(N);
        in.obj_avg = obj / Nd;
        in.ctr_avg = ctr / Nd;
        const Iterate avg = averaged_iterates(traj, N);
        in.averaged_gap = problem.value(avg.x, avg.z) - nu;
        in.averaged_ctr = cc.residual_vector(avg.x, avg.z).squaredNorm();
        a.bounds = evaluate_offline_bounds(in);
    } catch (const std::exception& e) {
        a.error = e.what();
    }
    return a;
}

OfflineExperiment run_offline_experiment(const OfflineSetup& setup, const AuditOptions& options) {
    OfflineExperiment ex;
    try {
        ex.trajectory = run_offline(setup.problem, setup.config, setup.init, setup.iterations);
    } catch (const std::exception& e) {
        ex.audit.N = setup.iterations;
        ex.audit.error = e.what();
        return ex;
    }
    ex.audit = audit_offline_trajectory(setup, ex.trajectory, options);
    return ex;
}

}  // namespace ospadmm
