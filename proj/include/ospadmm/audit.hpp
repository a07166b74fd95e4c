#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ospadmm/engine.hpp"

namespace ospadmm {

struct TauConstants {
    double tau = 1.0;
    double m = 1.0;    // min{τ, 1/τ}
    double s = 0.25;   // ¼[5 - τ - 3m]
    double t = 0.5;    // ½[1 - τ + m]
    double eta = 9.0;  // (1 + 8τ) / (2tτ)
};

TauConstants tau_constants(double tau);

/// Operators assembled for one round. p is the proximal factor (σ online, 1 offline).
struct OperatorBundle {
    PsdOperator M_bar;  // Diag(pS + Σ_f, T + Σ_g + σB*B) + σ s Ē*Ē
    PsdOperator H_bar;  // Diag(pS + ½Σ_f, T + Σ_g + 2tτσB*B) + ¼ tσ Ē*Ē
    PsdOperator Theta;  // ½Σ_f + pS + (2τ/(1+8τ)) tσ A*A
    PsdOperator W;      // Diag(Σ_f, Σ_g) + ½ tσ Ē*Ē
    PsdOperator M_hat;  // Diag(pS, T + σB*B) + (1 - m)σ Ē*Ē
    PsdOperator H_hat;  // Diag(pS, T + 2τσt B*B)
    PsdOperator M_cal;  // Diag(M̄, (στ)⁻¹ I)
    PsdOperator H_cal;  // Diag(H̄, t(στ²)⁻¹ I)

    bool blocks_pd = false;  // Σ_f + σS + σA*A ≻ 0 and Σ_g + T + σB*B ≻ 0
    bool M_bar_pd = false;
    bool H_bar_pd = false;

    bool pd_equivalence() const { return blocks_pd == M_bar_pd && M_bar_pd == H_bar_pd; }
};

/// min eigenvalue > 1e-9·max(1, ‖P‖).
bool positive_definite_scaled(const Mat& P);

OperatorBundle assemble_operators(const SolverConfig& config, const PsdOperator& S_k, const PsdOperator& sigma_f,
                                  const PsdOperator& sigma_g, const CouplingConstraint& cc);

struct Check {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack() const { return rhs - lhs; }
    /// slack ≥ -tol·max(1, |lhs|, |rhs|); infinite or NaN sides fail.
    bool passes(double tol) const;
};

/// Everything the per-round inequalities need for round k (1-based).
struct RoundData {
    const Cost* f = nullptr;  // f_k
    PsdOperator S;            // S_k
    Vec x, z, y;              // wᵏ
    Vec z_prev;               // zᵏ⁻¹
    Vec x_next, z_next, y_next;  // wᵏ⁺¹
};

struct RoundContext {
    const Regularizer* g = nullptr;
    const CouplingConstraint* cc = nullptr;
    SolverConfig config;
    Vec x_hat, z_hat;  // feasible comparison point
};

/// Descent inequality over M̄_k/H̄_k (weighted by the full y-terms).
Check check_descent_inequality(const RoundContext& ctx, const RoundData& round);
/// The finer per-round inequality with separate B, T, S and Σ terms.
Check check_theorem_inequality(const RoundContext& ctx, const RoundData& round);
/// ‖(x,z)‖²_H̄ ≥ ‖z‖²_{Σ_g+T} + ‖x‖²_Θ; lhs/rhs are the two sides at (x, z).
Check check_hbar_dominance(const OperatorBundle& bundle, const PsdOperator& sigma_g, const PsdOperator& T, const Vec& x,
                    const Vec& z);

/// dist(v, ∂g(z¹)) for v = B*(-y¹ - (1-τ)σR¹) - T(z¹ - z⁰); zero means round 1 is audit-ready.
double consistent_start_residual(const RoundContext& ctx, const Vec& x1, const Vec& z1, const Vec& y1,
                                 const Vec& z0);

/// Fejér-type recovery inequality for the offline method at a KKT triple.
Check check_fejer_recovery(const RoundContext& ctx, const RoundData& round, const Vec& y_bar);
/// ‖wᵏ - w̄‖²_𝓜 + ‖zᵏ - zᵏ⁻¹‖²_T with (x̄, z̄) = (ctx.x_hat, ctx.z_hat), evaluated with round k's
/// S_k and Σ_f at the iterate (x, z, y) of `round`.
double fejer_potential(const RoundContext& ctx, const RoundData& round, const Vec& y_bar);

struct RoundSlacks {
    std::size_t round = 0;
    Check descent;
    Check theorem;
    Check hbar_dominance;
};

/// Per-round kernel over a trajectory: serial reference and OpenMP version give identical output.
std::vector<RoundSlacks> audit_rounds_serial(const RoundContext& ctx, const std::vector<RoundData>& rounds);
std::vector<RoundSlacks> audit_rounds_parallel(const RoundContext& ctx, const std::vector<RoundData>& rounds);

/// Builds per-round data for rounds 1..N from a trajectory of N+1 iterates.
std::vector<RoundData> collect_rounds(const Trajectory& traj, const std::vector<CostPtr>& costs,
                                      const SolverConfig& config);

/// Mean of iterates 1..t.
Iterate averaged_iterates(const Trajectory& traj, std::size_t t);

struct AssumptionCertificate {
    double gamma0 = 0.0;       // max_k [F_k(ŵ) - F_k(wᵏ)]⁺, k = 1..N
    double gamma0_next = 0.0;  // max_k [F_k(ŵ) - F_k(wᵏ⁺¹)]⁺
    double L_sq = 0.0;         // (1/N) Σ ‖∇f_k(xᵏ)‖²
    bool s_lower_bound = false; // σS_k + cσA*A ⪰ cσI, c = 2τt/(1+8τ), every k
    bool monotone = false;     // S_1 ⪰ … ⪰ S_{N+1}
    double lambda_min_S = 0.0; // min_k λ_min(S_k), k = 1..N+1
    double worst_monotone_gap = 0.0;  // most negative eigenvalue seen along the chain
};

AssumptionCertificate certify_assumptions(const RoundContext& ctx, const Trajectory& traj,
                                          const std::vector<CostPtr>& costs, const std::vector<PsdOperator>& S);

/// One evaluated bound: lhs ≤ rhs.
struct BoundRecord {
    std::string id;
    bool evaluated = false;
    bool asserted = false;
    Check check;
    std::string note;
};

/// Scalars shared by the online bound formulas.
struct OnlineBoundInputs {
    std::size_t N = 0;
    double sigma = 1.0;
    TauConstants tc;
    double y1_sq = 0.0;         // ‖y¹‖²
    double z_hist_T = 0.0;      // ‖z¹ - z⁰‖²_T
    double g_z1 = 0.0;
    double g_zN1 = 0.0;
    double dist_sq = 0.0;       // Euclidean dist((x¹,z¹), S*_N)²
    double dist_Mbar_sq = 0.0;  // ‖w¹ - ŵ‖²_{M̄_1}
    double dist_Mhat_sq = 0.0;  // ‖w¹ - ŵ‖²_{M̂_1}
    double norm_sigma_f1 = 0.0, norm_T_sigma_g = 0.0, norm_EE = 0.0, norm_S1 = 0.0, norm_BB = 0.0, norm_T = 0.0;
    AssumptionCertificate cert;
    bool sigma_is_sqrtN = false;

    double obj_regret_avg = 0.0;       // (1/N)Σ F_k(wᵏ) - ν*
    double ctr_avg_shifted = 0.0;      // (1/N)Σ ‖rᵏ⁺¹‖²
    double ctr_avg = 0.0;              // (1/N)Σ ‖rᵏ‖²
    double solution_regret_avg = 0.0;  // (1/N)Σ ‖wᵏ⁺¹ - ŵ‖²_{W_k}
};

std::vector<BoundRecord> evaluate_online_bounds(const OnlineBoundInputs& in);

struct OfflineBoundInputs {
    std::size_t N = 0;
    double sigma = 1.0;
    TauConstants tc;
    double y1_sq = 0.0;
    double z_hist_T = 0.0;
    double F1 = 0.0;             // f(x¹) + g(z¹)
    double FN1 = 0.0;            // f(xᴺ⁺¹) + g(zᴺ⁺¹)
    double nu_star = 0.0;
    double r1_sq = 0.0;          // ‖Ax¹ + Bz¹ - c‖²
    double dist_sq = 0.0;
    double norm_BB = 0.0, norm_S_sigma_f = 0.0, norm_T_sigma_g = 0.0, norm_EE = 0.0;
    double gamma0 = 0.0;
    double gamma0_next = 0.0;

    double obj_avg = 0.0;        // (1/N)Σ F(wᵏ) - ν*, k = 1..N
    double ctr_avg = 0.0;        // (1/N)Σ ‖rᵏ‖², k = 1..N
    double averaged_gap = 0.0;   // F(x̂ᴺ, ẑᴺ) - ν*
    double averaged_ctr = 0.0;   // ‖Ax̂ᴺ + Bẑᴺ - c‖²
};

std::vector<BoundRecord> evaluate_offline_bounds(const OfflineBoundInputs& in);

}  // namespace ospadmm
