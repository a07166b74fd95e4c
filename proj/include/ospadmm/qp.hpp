#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ospadmm/online.hpp"

namespace ospadmm {

/// α = max_t λ_max(G_t/√N + AᵀA) + 1e-8.
double choose_alpha(const std::vector<Mat>& hessians, const Mat& A, std::size_t N);

/// S_t = αI - G_t/√N - AᵀA, certified PSD.
PsdOperator build_S_t(const Mat& G, const Mat& A, std::size_t N, double alpha);

struct QpState {
    Vec x;
    Vec z;
    Vec mu;
    Vec lambda;
    std::size_t k = 1;

    SolverState to_solver_state(const Vec& z_prev) const;
    static QpState from_solver_state(const SolverState& s, Eigen::Index m);
};

/// Closed-form x-update, valid for σ = √N and S_k built with the same α.
Vec qp_x_update(const QpState& state, const QuadraticCost& cost, const Mat& A, const Vec& b, const Mat& S_k,
                std::size_t N, double alpha);
/// Π_X(x_new + λ/√N).
Vec qp_z_update(const QpState& state, const Vec& x_new, const SimpleSet& X, std::size_t N);

/// Φ = {Ax - b = 0, z - x = 0} as a stacked coupling constraint with multiplier (μ, λ).
CouplingConstraint qp_constraint(const Mat& A, const Vec& b);

struct QpGeneratorConfig {
    Eigen::Index n = 5;
    Eigen::Index m = 3;
    std::size_t N = 100;
    std::uint64_t seed = 0;
    double G_scale = 0.5;
    double c_scale = 1.0;
    SimpleSet X = SimpleSet::box(5, -1.0, 1.0);
    bool fixed_G = false;
    QuadraticCost::SigmaKind sigma_op = QuadraticCost::SigmaKind::Zero;
};

struct QpInstance {
    QpGeneratorConfig config;
    Mat A;
    Vec b;
    Vec x_interior;  // point of X with A x = b used to build b
    OnlineStream stream;
    CouplingConstraint cc;
    RegularizerPtr g;
    double alpha = 0.0;  // chosen over rounds 1..N+1

    std::size_t N() const { return stream.horizon(); }
    std::shared_ptr<const QuadraticCost> quad_cost(std::size_t round) const;
    PsdOperator S(std::size_t round) const;
    /// σ = √N, online scaling, T = 0, S_k from this instance.
    SolverConfig solver_config(double tau) const;
    /// x¹ = z¹ = Π_X(0), μ¹ = λ¹ = 0.
    SolverState initial_state() const;
    /// Step using the closed-form updates; σ must be √N.
    Stepper closed_form_stepper(const SolverConfig& config) const;
};

QpInstance make_qp_instance(const QpGeneratorConfig& config);

/// Offline problem min ½(x - a)ᵀG(x - a) + g(z) s.t. Ax + Bz = c with G ≻ 0, so f ≥ 0.
/// g is zero or ½zᵀQz (Q ⪰ 0 random); A has full row rank m ≤ n. With g zero the optimum is
/// unique only when B has full column rank, so p ≤ m is required then.
struct OfflineQpConfig {
    Eigen::Index n = 4;
    Eigen::Index p = 2;
    Eigen::Index m = 3;
    std::uint64_t seed = 0;
    bool quadratic_g = false;
    double S_scale = 0.1;  // S = S_scale·RᵀR, R uniform
    double T_scale = 0.1;  // 𝒯 = T_scale·I
    QuadraticCost::SigmaKind sigma_op = QuadraticCost::SigmaKind::Zero;
};

struct OfflineQpInstance {
    OfflineQpConfig config;
    OfflineProblem problem;
    Vec a;
    PsdOperator S;
    PsdOperator T;

    /// Offline scaling with S, 𝒯 from this instance.
    SolverConfig solver_config(double sigma, double tau) const;
    /// Feasible start (x¹ least-norm solution of Ax = c, z¹ = argmin g = 0, y¹ = 0).
    SolverState feasible_start() const;
};

OfflineQpInstance make_offline_qp(const OfflineQpConfig& config);

}  // namespace ospadmm
