#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ospadmm/problem.hpp"

namespace ospadmm {

/// (1+√5)/2, the open upper end of the admissible dual step-length range.
inline constexpr double kGoldenRatio = 1.6180339887498949;

/// Throws "tau out of range (0, (1+√5)/2)" unless 0 < tau < (1+√5)/2.
void validate_tau(double tau);

enum class ProximalScaling {
    Online,   // (σ/2)‖x - xᵏ‖²_{S_k}
    Offline,  // ½‖x - xᵏ‖²_{S_k}
};

using SSchedule = std::function<PsdOperator(std::size_t k)>;

struct SolverConfig {
    double sigma = 1.0;
    double tau = 1.0;
    PsdOperator T;
    SSchedule s_schedule;
    ProximalScaling scaling = ProximalScaling::Online;

    /// Multiplier p in (p/2)‖x - xᵏ‖²_{S_k}.
    double prox_factor() const { return scaling == ProximalScaling::Online ? sigma : 1.0; }
    PsdOperator S(std::size_t k) const;
    void validate(const CouplingConstraint& cc) const;
};

/// Constant schedule S_k = S for every k.
SSchedule constant_schedule(PsdOperator S);

struct SolverState {
    Vec x;
    Vec z;
    Vec z_prev;  // zᵏ⁻¹; equal to z at k = 1
    Vec y;
    std::size_t k = 1;

    static SolverState initial(Vec x, Vec z, Vec y);
};

struct StepRecord {
    Vec x_new;
    Vec z_new;
    Vec y_new;
    double loss = 0.0;      // f_k(xᵏ⁺¹) + g(zᵏ⁺¹)
    double residual = 0.0;  // ‖A xᵏ⁺¹ + B zᵏ⁺¹ - c‖
};

/// f(x) + g(z) + ⟨y, Ax+Bz-c⟩ + (σ/2)‖Ax+Bz-c‖²; +∞ iff g(z) = +∞.
double aug_lagrangian(const Cost& f, const Regularizer& g, const CouplingConstraint& cc, double sigma,
                      const Vec& x, const Vec& z, const Vec& y);

Vec x_update(const Cost& f, const SolverState& state, const SolverConfig& config,
             const CouplingConstraint& cc);
Vec z_update(const Regularizer& g, const Vec& x_new, const SolverState& state, const SolverConfig& config,
             const CouplingConstraint& cc);
Vec dual_update(const SolverState& state, const SolverConfig& config, const CouplingConstraint& cc,
                const Vec& x_new, const Vec& z_new);

std::pair<SolverState, StepRecord> step(const Cost& f, const Regularizer& g, const CouplingConstraint& cc,
                                        const SolverState& state, const SolverConfig& config);

/// Objective of the x-subproblem at x (terms constant in x included).
double x_subproblem_value(const Cost& f, const SolverState& state, const SolverConfig& config,
                          const CouplingConstraint& cc, const Vec& x);
/// Objective of the z-subproblem at z given x_new; +∞ outside dom g.
double z_subproblem_value(const Regularizer& g, const Vec& x_new, const SolverState& state,
                          const SolverConfig& config, const CouplingConstraint& cc, const Vec& z);

/// Smallest change of the subproblem objective over `samples` random unit perturbations of
/// size eps (kept inside dom g for z). Non-negative up to rounding at an exact minimizer.
double x_update_exactness(const Cost& f, const SolverState& state, const SolverConfig& config,
                          const CouplingConstraint& cc, const Vec& x_new, std::uint64_t seed,
                          int samples = 20, double eps = 1e-6);
double z_update_exactness(const Regularizer& g, const Vec& x_new, const SolverState& state,
                          const SolverConfig& config, const CouplingConstraint& cc, const Vec& z_new,
                          std::uint64_t seed, int samples = 20, double eps = 1e-6);

struct Iterate {
    Vec x;
    Vec z;
    Vec y;
};

/// Iterates w¹, w², … with z⁰ := z¹.
struct Trajectory {
    std::vector<Iterate> iterates;

    std::size_t size() const { return iterates.size(); }
    /// 1-based access; k = 0 returns the first iterate (only z⁰ is meaningful there).
    const Iterate& at(std::size_t k) const;
    const Vec& z_before(std::size_t k) const { return at(k == 0 ? 0 : k - 1).z; }
};

/// Runs the offline method for `iterations` steps on a fixed problem.
Trajectory run_offline(const OfflineProblem& problem, const SolverConfig& config, const SolverState& init,
                       std::size_t iterations);

}  // namespace ospadmm
