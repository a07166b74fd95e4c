#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ospadmm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Raised for dimension mismatches, invalid operators and other contract violations.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what);
void require_finite(const Vec& v, const std::string& what);
void require_finite(const Mat& m, const std::string& what);

/// Dense linear map between two Euclidean spaces (rows = output dim).
class LinearMap {
 public:
    LinearMap() = default;
    explicit LinearMap(Mat matrix);

    static LinearMap zero(Eigen::Index out_dim, Eigen::Index in_dim);
    static LinearMap identity(Eigen::Index dim);

    const Mat& matrix() const { return m_; }
    Eigen::Index out_dim() const { return m_.rows(); }
    Eigen::Index in_dim() const { return m_.cols(); }

    Vec apply(const Vec& v) const;
    Vec apply_adjoint(const Vec& v) const;
    LinearMap adjoint() const { return LinearMap(m_.transpose()); }
    /// M*M as a dense matrix.
    Mat gram() const { return m_.transpose() * m_; }

 private:
    Mat m_;
};

/// Self-adjoint positive semidefinite operator, validated on construction.
///
/// Symmetry is checked to 1e-12 relative and the smallest eigenvalue must be
/// at least -1e-10 times the spectral norm. The stored matrix is symmetrized.
class PsdOperator {
 public:
    PsdOperator() = default;
    explicit PsdOperator(const Mat& matrix);

    static PsdOperator zero(Eigen::Index dim);
    static PsdOperator identity(Eigen::Index dim, double scale = 1.0);
    static PsdOperator diagonal(const Vec& diag);

    const Mat& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    double spectral_norm() const { return norm_; }
    double min_eigenvalue() const { return min_eig_; }
    double max_eigenvalue() const { return norm_; }
    bool is_zero() const { return norm_ == 0.0; }

    Vec apply(const Vec& v) const;

 private:
    Mat m_;
    double norm_ = 0.0;
    double min_eig_ = 0.0;
};

/// Extreme eigenvalues of a symmetric matrix.
struct EigenRange {
    double min = 0.0;
    double max = 0.0;
};
EigenRange symmetric_eigen_range(const Mat& sym);
double spectral_norm_symmetric(const Mat& sym);

/// ⟨v, Bw⟩.
double bilinear(const PsdOperator& op, const Vec& v, const Vec& w);
/// ‖v‖²_B; tiny negative values (≥ -1e-12) are clamped to zero.
double seminorm_sq(const PsdOperator& op, const Vec& v);
/// ‖v‖_B = √⟨v, Bv⟩.
double seminorm(const PsdOperator& op, const Vec& v);
/// Smallest seminorm distance from v to a finite point set.
double dist_B(const PsdOperator& op, const Vec& v, std::span<const Vec> points);

/// P ⪰ Q up to tol·max(1, ‖P-Q‖).
bool loewner_geq(const PsdOperator& p, const PsdOperator& q, double tol);
bool loewner_geq(const Mat& p, const Mat& q, double tol);
/// Smallest eigenvalue strictly above tol.
bool positive_definite(const Mat& p, double tol);
bool positive_definite(const PsdOperator& p, double tol);

/// Solves Hx = rhs for symmetric H, rejecting H unless its smallest eigenvalue
/// exceeds 1e-12·max(1, ‖H‖). `what` names the failing subproblem in the error.
Vec solve_positive_definite(const Mat& H, const Vec& rhs, const std::string& what);

Mat block_diag(const Mat& a, const Mat& b);
Vec concat(const Vec& a, const Vec& b);

}  // namespace ospadmm
