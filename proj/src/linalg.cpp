#include "ospadmm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ospadmm {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

void require_finite(const Vec& v, const std::string& what) {
    if (!v.allFinite()) throw Error(what + ": non-finite entry");
}

void require_finite(const Mat& m, const std::string& what) {
    if (!m.allFinite()) throw Error(what + ": non-finite entry");
}

LinearMap::LinearMap(Mat matrix) : m_(std::move(matrix)) {
    require_finite(m_, "LinearMap");
}

LinearMap LinearMap::zero(Eigen::Index out_dim, Eigen::Index in_dim) {
    return LinearMap(Mat::Zero(out_dim, in_dim));
}

LinearMap LinearMap::identity(Eigen::Index dim) {
    return LinearMap(Mat::Identity(dim, dim));
}

Vec LinearMap::apply(const Vec& v) const {
    require(v.size() == m_.cols(), "LinearMap::apply: dimension mismatch");
    return m_ * v;
}

Vec LinearMap::apply_adjoint(const Vec& v) const {
    require(v.size() == m_.rows(), "LinearMap::apply_adjoint: dimension mismatch");
    return m_.transpose() * v;
}

EigenRange symmetric_eigen_range(const Mat& sym) {
    if (sym.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("symmetric eigensolver failed");
    const auto& ev = es.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

double spectral_norm_symmetric(const Mat& sym) {
    const auto r = symmetric_eigen_range(sym);
    return std::max(std::abs(r.min), std::abs(r.max));
}

PsdOperator::PsdOperator(const Mat& matrix) {
    require(matrix.rows() == matrix.cols(), "PsdOperator: matrix must be square");
    require_finite(matrix, "PsdOperator");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff() * (matrix.size() > 0));
    const double asym = matrix.size() ? (matrix - matrix.transpose()).cwiseAbs().maxCoeff() : 0.0;
    require(asym <= 1e-12 * scale, "PsdOperator: matrix is not symmetric");
    m_ = 0.5 * (matrix + matrix.transpose());
    const auto r = symmetric_eigen_range(m_);
    norm_ = std::max(std::abs(r.min), std::abs(r.max));
    min_eig_ = r.min;
    require(r.min >= -1e-10 * std::max(norm_, std::numeric_limits<double>::min()),
            "PsdOperator: operator not PSD (min eigenvalue " + std::to_string(r.min) + ")");
}

PsdOperator PsdOperator::zero(Eigen::Index dim) { return PsdOperator(Mat::Zero(dim, dim)); }

PsdOperator PsdOperator::identity(Eigen::Index dim, double scale) {
    return PsdOperator(scale * Mat::Identity(dim, dim));
}

PsdOperator PsdOperator::diagonal(const Vec& diag) {
    return PsdOperator(Mat(diag.asDiagonal()));
}

Vec PsdOperator::apply(const Vec& v) const {
    require(v.size() == m_.cols(), "PsdOperator::apply: dimension mismatch");
    return m_ * v;
}

double bilinear(const PsdOperator& op, const Vec& v, const Vec& w) {
    require(v.size() == op.dim() && w.size() == op.dim(), "bilinear: dimension mismatch");
    return v.dot(op.matrix() * w);
}

double seminorm_sq(const PsdOperator& op, const Vec& v) {
    require(v.size() == op.dim(), "seminorm: dimension mismatch");
    const double q = v.dot(op.matrix() * v);
    if (q < -1e-12) throw Error("seminorm: operator not PSD (negative quadratic form)");
    return std::max(q, 0.0);
}

double seminorm(const PsdOperator& op, const Vec& v) { return std::sqrt(seminorm_sq(op, v)); }

double dist_B(const PsdOperator& op, const Vec& v, std::span<const Vec> points) {
    require(!points.empty(), "dist_B: empty point set");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        require(p.size() == v.size(), "dist_B: dimension mismatch");
        best = std::min(best, seminorm(op, p - v));
    }
    return best;
}

bool loewner_geq(const Mat& p, const Mat& q, double tol) {
    require(p.rows() == q.rows() && p.cols() == q.cols(), "loewner_geq: dimension mismatch");
    const Mat d = 0.5 * ((p - q) + (p - q).transpose());
    const auto r = symmetric_eigen_range(d);
    const double norm = std::max(std::abs(r.min), std::abs(r.max));
    return r.min >= -tol * std::max(1.0, norm);
}

bool loewner_geq(const PsdOperator& p, const PsdOperator& q, double tol) {
    return loewner_geq(p.matrix(), q.matrix(), tol);
}

bool positive_definite(const Mat& p, double tol) {
    require(p.rows() == p.cols(), "positive_definite: matrix must be square");
    if (p.rows() == 0) return true;
    return symmetric_eigen_range(0.5 * (p + p.transpose())).min > tol;
}

bool positive_definite(const PsdOperator& p, double tol) {
    return p.dim() == 0 || p.min_eigenvalue() > tol;
}

Vec solve_positive_definite(const Mat& H, const Vec& rhs, const std::string& what) {
    require(H.rows() == H.cols() && H.rows() == rhs.size(), what + ": dimension mismatch");
    if (H.rows() == 0) return Vec(0);
    const Mat sym = 0.5 * (H + H.transpose());
    const auto r = symmetric_eigen_range(sym);
    const double scale = std::max({1.0, std::abs(r.min), std::abs(r.max)});
    if (!(r.min > 1e-12 * scale)) throw Error(what);
    Eigen::LLT<Mat> llt(sym);
    if (llt.info() != Eigen::Success) throw Error(what);
    return llt.solve(rhs);
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size());
    out << a, b;
    return out;
}

}  // namespace ospadmm
