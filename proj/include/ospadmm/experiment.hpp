#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ospadmm/audit.hpp"
#include "ospadmm/online.hpp"
#include "ospadmm/oracle.hpp"

namespace ospadmm {

struct AuditOptions {
    double tol = 1e-8;
    bool parallel = true;
    /// Feasibility slack allowed for the oracle representative before the audit refuses it.
    double feasibility_tol = 1e-10;
};

/// Named per-round check with its assertion status.
struct RoundCheck {
    std::size_t round = 0;
    std::string id;
    Check check;
    bool asserted = true;
};

/// Solves the averaged problem: analytic KKT when g admits it, converged iterations otherwise.
OfflineOptimum solve_reference(const OfflineProblem& problem);

struct OnlineSetup {
    OnlineStream stream;
    RegularizerPtr g;
    CouplingConstraint cc;
    SolverConfig config;
    SolverState init;
    Stepper stepper;  // empty: generic engine step
};

struct OnlineAudit {
    std::size_t N = 0;
    OfflineOptimum optimum;  // of the averaged problem, value = ν*_N
    double regret_obj = 0.0;
    double regret_ctr = 0.0;
    double consistent_start = 0.0;
    bool round1_asserted = false;
    bool sigma_zero = false;  // every Σ_{f_k} and Σ_g is zero
    bool pd_equivalence_round1 = true;
    std::vector<RoundCheck> checks;
    AssumptionCertificate cert;
    std::vector<BoundRecord> bounds;
    std::string error;  // non-empty when the run or the audit could not complete

    /// Ids ("round:id") of asserted checks that fail, then asserted bounds that fail.
    std::vector<std::string> failures(double tol) const;
};

/// Audits a recorded online trajectory (iterates 1..N+1) against its stream.
OnlineAudit audit_online_trajectory(const OnlineSetup& setup, const Trajectory& traj, const RegretLog& log,
                                    const AuditOptions& options);

struct OnlineExperiment {
    OnlineRun run;
    OnlineAudit audit;
};

OnlineExperiment run_online_experiment(const OnlineSetup& setup, const AuditOptions& options);

struct OfflineSetup {
    OfflineProblem problem;
    SolverConfig config;
    SolverState init;
    std::size_t iterations = 0;
};

struct OfflineAudit {
    std::size_t N = 0;
    OfflineOptimum optimum;
    double consistent_start = 0.0;
    bool round1_asserted = false;
    bool sigma_zero = false;
    std::vector<RoundCheck> checks;
    std::vector<double> potentials;  // Fejér potential at iterates 1..N+1
    bool potentials_monotone = true;
    std::vector<BoundRecord> bounds;
    std::string error;

    std::vector<std::string> failures(double tol) const;
};

OfflineAudit audit_offline_trajectory(const OfflineSetup& setup, const Trajectory& traj, const AuditOptions& options);

struct OfflineExperiment {
    Trajectory trajectory;
    OfflineAudit audit;
};

OfflineExperiment run_offline_experiment(const OfflineSetup& setup, const AuditOptions& options);

}  // namespace ospadmm
