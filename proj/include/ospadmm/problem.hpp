#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ospadmm/linalg.hpp"
#include "ospadmm/projection.hpp"

namespace ospadmm {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Φ = {(x, z) : Ax + Bz = c}.
struct CouplingConstraint {
    LinearMap A;
    LinearMap B;
    Vec c;

    CouplingConstraint() = default;
    CouplingConstraint(LinearMap a, LinearMap b, Vec c);

    Eigen::Index x_dim() const { return A.in_dim(); }
    Eigen::Index z_dim() const { return B.in_dim(); }
    Eigen::Index y_dim() const { return c.size(); }

    /// Ax + Bz - c.
    Vec residual_vector(const Vec& x, const Vec& z) const;
    /// Ē = [A B].
    Mat stacked() const;
};

double residual(const CouplingConstraint& cc, const Vec& x, const Vec& z);

/// ½ xᵀGx + cᵀx + constant.
struct QuadraticForm {
    Mat G;
    Vec c;
    double constant = 0.0;
};

/// One round's convex, finite-valued piece f_t.
class Cost {
 public:
    virtual ~Cost() = default;

    virtual Eigen::Index dim() const = 0;
    virtual double value(const Vec& x) const = 0;
    virtual Vec subgradient(const Vec& x) const = 0;
    /// Strong-convexity operator Σ_f (zero when merely convex).
    virtual const PsdOperator& sigma_op() const = 0;
    /// argmin_x f(x) + ½ xᵀHx - ⟨q, x⟩.
    virtual Vec solve_x(const Mat& hessian, const Vec& linear) const = 0;
    virtual std::optional<QuadraticForm> quadratic_form() const { return std::nullopt; }
};

using CostPtr = std::shared_ptr<const Cost>;

class QuadraticCost final : public Cost {
 public:
    enum class SigmaKind { Zero, Hessian };

    QuadraticCost(const Mat& G, Vec c, double constant = 0.0, SigmaKind sigma = SigmaKind::Zero);
    static std::shared_ptr<QuadraticCost> linear(Vec c);

    Eigen::Index dim() const override { return c_.size(); }
    double value(const Vec& x) const override;
    Vec subgradient(const Vec& x) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_x(const Mat& hessian, const Vec& linear) const override;
    std::optional<QuadraticForm> quadratic_form() const override;

    const PsdOperator& G() const { return G_; }
    const Vec& c() const { return c_; }
    double constant() const { return constant_; }

 private:
    PsdOperator G_;
    Vec c_;
    double constant_;
    PsdOperator sigma_;
};

/// Sum of costs. Subproblems are solvable when every term is quadratic.
class SumCost final : public Cost {
 public:
    explicit SumCost(std::vector<CostPtr> terms, double scale = 1.0);

    Eigen::Index dim() const override { return dim_; }
    double value(const Vec& x) const override;
    Vec subgradient(const Vec& x) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_x(const Mat& hessian, const Vec& linear) const override;
    std::optional<QuadraticForm> quadratic_form() const override { return merged_; }

 private:
    std::vector<CostPtr> terms_;
    double scale_;
    Eigen::Index dim_;
    PsdOperator sigma_;
    std::optional<QuadraticForm> merged_;
};

/// The static piece g over 𝒵; may be +∞ (indicator functions).
class Regularizer {
 public:
    virtual ~Regularizer() = default;

    virtual std::string kind() const = 0;
    virtual Eigen::Index dim() const = 0;
    virtual double value(const Vec& z) const = 0;
    /// A deterministic element of ∂g(z); z must lie in dom g.
    virtual Vec subgradient(const Vec& z) const = 0;
    /// dist(v, ∂g(z)).
    virtual double subdiff_distance(const Vec& z, const Vec& v) const = 0;
    virtual const PsdOperator& sigma_op() const = 0;
    /// argmin_z g(z) + ½ zᵀHz - ⟨q, z⟩.
    virtual Vec solve_z(const Mat& hessian, const Vec& linear) const = 0;
    /// s·g for s > 0.
    virtual std::shared_ptr<const Regularizer> scaled(double s) const = 0;
    /// True when the minimizer of g over an affine set has a direct linear-algebra solution.
    virtual bool analytic() const { return false; }
    /// A point near z + eps·d that stays in dom g (used for optimality probing).
    virtual Vec feasible_perturbation(const Vec& z, const Vec& d, double eps) const { return z + eps * d; }
};

using RegularizerPtr = std::shared_ptr<const Regularizer>;

class ZeroRegularizer final : public Regularizer {
 public:
    explicit ZeroRegularizer(Eigen::Index n);
    std::string kind() const override { return "zero"; }
    Eigen::Index dim() const override { return n_; }
    double value(const Vec& z) const override;
    Vec subgradient(const Vec& z) const override;
    double subdiff_distance(const Vec& z, const Vec& v) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_z(const Mat& hessian, const Vec& linear) const override;
    RegularizerPtr scaled(double s) const override;
    bool analytic() const override { return true; }

 private:
    Eigen::Index n_;
    PsdOperator sigma_;
};

/// ½ zᵀQz + qᵀz.
class QuadraticRegularizer final : public Regularizer {
 public:
    QuadraticRegularizer(const Mat& Q, Vec q);
    std::string kind() const override { return "quadratic"; }
    Eigen::Index dim() const override { return q_.size(); }
    double value(const Vec& z) const override;
    Vec subgradient(const Vec& z) const override;
    double subdiff_distance(const Vec& z, const Vec& v) const override;
    const PsdOperator& sigma_op() const override { return Q_; }
    Vec solve_z(const Mat& hessian, const Vec& linear) const override;
    RegularizerPtr scaled(double s) const override;
    bool analytic() const override { return true; }

    const PsdOperator& Q() const { return Q_; }
    const Vec& q() const { return q_; }

 private:
    PsdOperator Q_;
    Vec q_;
};

/// δ_{z : Cz = d}.
class AffineIndicator final : public Regularizer {
 public:
    AffineIndicator(Mat C, Vec d);
    std::string kind() const override { return "indicator_affine"; }
    Eigen::Index dim() const override { return C_.cols(); }
    double value(const Vec& z) const override;
    Vec subgradient(const Vec& z) const override;
    double subdiff_distance(const Vec& z, const Vec& v) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_z(const Mat& hessian, const Vec& linear) const override;
    RegularizerPtr scaled(double) const override;
    bool analytic() const override { return true; }
    Vec feasible_perturbation(const Vec& z, const Vec& d, double eps) const override;

    const Mat& C() const { return C_; }
    const Vec& d() const { return d_; }

 private:
    Mat C_;
    Vec d_;
    Vec particular_;
    Mat null_basis_;  // orthonormal basis of null(C)
    PsdOperator sigma_;
};

/// δ_X for a box, ball or simplex.
class SetIndicator final : public Regularizer {
 public:
    explicit SetIndicator(SimpleSet set);
    std::string kind() const override { return set_.kind_name(); }
    Eigen::Index dim() const override { return set_.dim(); }
    double value(const Vec& z) const override;
    Vec subgradient(const Vec& z) const override;
    double subdiff_distance(const Vec& z, const Vec& v) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_z(const Mat& hessian, const Vec& linear) const override;
    RegularizerPtr scaled(double) const override;
    Vec feasible_perturbation(const Vec& z, const Vec& d, double eps) const override;

    const SimpleSet& set() const { return set_; }

 private:
    SimpleSet set_;
    PsdOperator sigma_;
};

/// w·‖z‖₁.
class L1Regularizer final : public Regularizer {
 public:
    L1Regularizer(Eigen::Index n, double weight);
    std::string kind() const override { return "l1"; }
    Eigen::Index dim() const override { return n_; }
    double value(const Vec& z) const override;
    Vec subgradient(const Vec& z) const override;
    double subdiff_distance(const Vec& z, const Vec& v) const override;
    const PsdOperator& sigma_op() const override { return sigma_; }
    Vec solve_z(const Mat& hessian, const Vec& linear) const override;
    RegularizerPtr scaled(double s) const override;

    double weight() const { return weight_; }

 private:
    Eigen::Index n_;
    double weight_;
    PsdOperator sigma_;
};

/// Returns ρ when H = ρI (relative 1e-10), otherwise nullopt.
std::optional<double> scalar_multiple_of_identity(const Mat& H);

/// A stream of round costs revealed one at a time.
///
/// The generator must be a pure function of the round index so that the same
/// seed reproduces the sequence bit for bit.
class OnlineStream {
 public:
    using Generator = std::function<CostPtr(std::size_t round)>;

    OnlineStream(std::size_t horizon, std::uint64_t seed, Eigen::Index dim, Generator gen);

    std::size_t horizon() const { return horizon_; }
    std::uint64_t seed() const { return seed_; }
    Eigen::Index dim() const { return dim_; }
    /// Cost of round t, 1-based. Rounds beyond the horizon are allowed (S_{N+1} needs G_{N+1}).
    CostPtr cost(std::size_t round) const;

 private:
    std::size_t horizon_;
    std::uint64_t seed_;
    Eigen::Index dim_;
    Generator gen_;
};

struct QuadraticStreamParams {
    Eigen::Index n = 1;
    std::size_t N = 1;
    std::uint64_t seed = 0;
    double G_scale = 1.0;
    double c_scale = 1.0;
    bool fixed_G = false;
    QuadraticCost::SigmaKind sigma = QuadraticCost::SigmaKind::Zero;
};

/// f_t(x) = ½xᵀG_t x + c_tᵀx with G_t = MᵀM, M uniform in [-G_scale, G_scale]^{n×n},
/// c_t uniform in [-c_scale, c_scale]^n.
OnlineStream make_quadratic_stream(const QuadraticStreamParams& p);

/// f_t(x) = c_tᵀx with c_t uniform in [-c_scale, c_scale]^n.
OnlineStream make_linear_stream(Eigen::Index n, std::size_t N, std::uint64_t seed, double c_scale);

/// Engine seeded from (seed, round, tag); one per round keeps streams random access.
std::mt19937_64 round_engine(std::uint64_t seed, std::uint64_t round, std::uint64_t tag);

/// min f(x) + g(z) s.t. Ax + Bz = c.
struct OfflineProblem {
    CostPtr f;
    RegularizerPtr g;
    CouplingConstraint cc;

    double value(const Vec& x, const Vec& z) const { return f->value(x) + g->value(z); }
};

/// min Σ_t f_t(x) + N·g(z) s.t. Ax + Bz = c.
OfflineProblem aggregate_problem(const OnlineStream& stream, const RegularizerPtr& g,
                                 const CouplingConstraint& cc);
/// The aggregate divided by N; its optimal value is ν*_N.
OfflineProblem averaged_problem(const OnlineStream& stream, const RegularizerPtr& g,
                                const CouplingConstraint& cc);

}  // namespace ospadmm
