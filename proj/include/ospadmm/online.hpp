#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospadmm/engine.hpp"

namespace ospadmm {

struct RoundRecord {
    std::size_t round = 0;
    double loss = 0.0;         // f_t(xᵗ) + g(zᵗ)
    double residual_sq = 0.0;  // ‖Axᵗ + Bzᵗ - c‖²
    double cum_loss = 0.0;
    double cum_ctr = 0.0;
    double subgrad_sq = 0.0;   // ‖∇f_t(xᵗ)‖² with the cost's own subgradient choice
};

struct RegretLog {
    std::vector<RoundRecord> rounds;

    std::size_t size() const { return rounds.size(); }
};

/// Σ losses - N·ν*; +∞ if any loss is +∞.
double objective_regret(const RegretLog& log, double nu_star, std::size_t N);
/// Σ residual².
double constraint_regret(const RegretLog& log);

/// One application of the update rule for a revealed cost; defaults to the generic engine step.
using Stepper = std::function<std::pair<SolverState, StepRecord>(const Cost& f, const SolverState& state)>;

struct OnlineRun {
    RegretLog log;
    Trajectory trajectory;  // iterates 1..N+1
    std::optional<std::string> error;  // set when a step failed; log holds the rounds completed
};

/// √N, the penalty used for the O(√N) regret bounds.
double default_sigma(std::size_t N);

/// Round t commits (xᵗ, zᵗ), reveals f_t, charges f_t(xᵗ) + g(zᵗ), then steps with f_t.
OnlineRun run_online(const OnlineStream& stream, const Regularizer& g, const CouplingConstraint& cc,
                     const SolverConfig& config, const SolverState& init, Stepper stepper = {});

}  // namespace ospadmm
