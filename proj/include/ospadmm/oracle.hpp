#pragma once

#include <cstdint>
#include <string>

#include "ospadmm/engine.hpp"

namespace ospadmm {

struct KktTriple {
    Vec x;
    Vec z;
    Vec y;
    double dual_x_residual = 0.0;  // ‖∇f(x̄) + A*ȳ‖
    double dual_z_residual = 0.0;  // dist(-B*ȳ, ∂g(z̄))
    double primal_residual = 0.0;  // ‖Ax̄ + Bz̄ - c‖

    double max_residual() const;
};

/// Residuals of (x, z, y) against 0 ∈ ∂f(x)+A*y, 0 ∈ ∂g(z)+B*y, Ax+Bz = c.
KktTriple certify_kkt(const OfflineProblem& problem, Vec x, Vec z, Vec y);

enum class OracleMethod { AnalyticKkt, ConvergedSpadmm };

std::string method_name(OracleMethod m);

struct OracleOptions {
    double tau = 1.618 - 1e-3;
    double sigma = 1.0;
    double tol = 1e-10;
    std::size_t max_iterations = 1'000'000;
};

struct OfflineOptimum {
    Vec x;
    Vec z;
    double value = 0.0;
    OracleMethod method = OracleMethod::AnalyticKkt;
    KktTriple kkt;
    std::size_t iterations = 0;
};

/// Raised when the iterative oracle exhausts its budget; carries the last residuals.
class OracleNotConverged : public Error {
 public:
    OracleNotConverged(const std::string& what, double primal, double change)
        : Error(what), primal_residual(primal), iterate_change(change) {}
    double primal_residual;
    double iterate_change;
};

OfflineOptimum solve_offline(const OfflineProblem& problem, OracleMethod method,
                             const OracleOptions& options = {});

/// Analytic KKT triple; requires quadratic f and g in {zero, quadratic, indicator_affine}.
KktTriple kkt_triple(const OfflineProblem& problem);
/// Minimum-norm KKT triple for a singular but consistent saddle system (non-unique optimum).
KktTriple kkt_triple_min_norm(const OfflineProblem& problem);

struct LowerBoundCheck {
    int samples = 0;        // feasible samples actually evaluated
    double min_gap = 0.0;   // min over samples of value(sample) - ν*
};

/// Evaluates the objective at random feasible points w̄ + t·d, d ∈ null([A B]), t halved until
/// g is finite.
LowerBoundCheck lower_bound_check(const OfflineProblem& problem, const OfflineOptimum& opt, std::uint64_t seed,
                                  int samples = 100);

}  // namespace ospadmm
