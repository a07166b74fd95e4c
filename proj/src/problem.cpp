#include "ospadmm/problem.hpp"

#include <algorithm>
#include <cmath>

namespace ospadmm {

namespace {

constexpr const char* kNonUniqueX =
    "non-unique x-subproblem: well-posedness requires Σ_f + σS_k + σA*A ≻ 0";
constexpr const char* kNonUniqueZ =
    "non-unique z-subproblem: well-posedness requires Σ_g + T + σB*B ≻ 0";

void check_dim(Eigen::Index got, Eigen::Index want, const char* what) {
    require(got == want, std::string(what) + ": dimension mismatch");
}

double prox_scalar(const Mat& hessian) {
    const auto rho = scalar_multiple_of_identity(hessian);
    if (!rho) {
        throw Error(
            "unsupported z-subproblem: prox-type regularizers need σB*B + T to be a positive "
            "multiple of the identity");
    }
    return *rho;
}

}  // namespace

CouplingConstraint::CouplingConstraint(LinearMap a, LinearMap b, Vec c_)
    : A(std::move(a)), B(std::move(b)), c(std::move(c_)) {
    require(A.out_dim() == c.size() && B.out_dim() == c.size(),
            "CouplingConstraint: A, B and c must share the output dimension");
    require_finite(c, "CouplingConstraint c");
}

Vec CouplingConstraint::residual_vector(const Vec& x, const Vec& z) const {
    return A.apply(x) + B.apply(z) - c;
}

Mat CouplingConstraint::stacked() const {
    Mat e(c.size(), A.in_dim() + B.in_dim());
    e << A.matrix(), B.matrix();
    return e;
}

double residual(const CouplingConstraint& cc, const Vec& x, const Vec& z) {
    return cc.residual_vector(x, z).norm();
}

// ---- costs -------------------------------------------------------------

QuadraticCost::QuadraticCost(const Mat& G, Vec c, double constant, SigmaKind sigma)
    : G_(G), c_(std::move(c)), constant_(constant) {
    check_dim(G_.dim(), c_.size(), "QuadraticCost");
    require_finite(c_, "QuadraticCost c");
    sigma_ = sigma == SigmaKind::Hessian ? G_ : PsdOperator::zero(c_.size());
}

std::shared_ptr<QuadraticCost> QuadraticCost::linear(Vec c) {
    const auto n = c.size();
    return std::make_shared<QuadraticCost>(Mat::Zero(n, n), std::move(c));
}

double QuadraticCost::value(const Vec& x) const {
    check_dim(x.size(), dim(), "QuadraticCost::value");
    return 0.5 * x.dot(G_.matrix() * x) + c_.dot(x) + constant_;
}

Vec QuadraticCost::subgradient(const Vec& x) const {
    check_dim(x.size(), dim(), "QuadraticCost::subgradient");
    return G_.matrix() * x + c_;
}

Vec QuadraticCost::solve_x(const Mat& hessian, const Vec& linear) const {
    check_dim(linear.size(), dim(), "QuadraticCost::solve_x");
    return solve_positive_definite(G_.matrix() + hessian, linear - c_, kNonUniqueX);
}

std::optional<QuadraticForm> QuadraticCost::quadratic_form() const {
    return QuadraticForm{G_.matrix(), c_, constant_};
}

SumCost::SumCost(std::vector<CostPtr> terms, double scale) : terms_(std::move(terms)), scale_(scale) {
    require(!terms_.empty(), "SumCost: no terms");
    require(scale > 0.0, "SumCost: scale must be positive");
    dim_ = terms_.front()->dim();
    Mat sigma = Mat::Zero(dim_, dim_);
    QuadraticForm merged{Mat::Zero(dim_, dim_), Vec::Zero(dim_), 0.0};
    bool all_quadratic = true;
    for (const auto& t : terms_) {
        check_dim(t->dim(), dim_, "SumCost");
        sigma += t->sigma_op().matrix();
        if (auto q = t->quadratic_form()) {
            merged.G += q->G;
            merged.c += q->c;
            merged.constant += q->constant;
        } else {
            all_quadratic = false;
        }
    }
    sigma_ = PsdOperator(scale_ * sigma);
    if (all_quadratic) {
        merged.G *= scale_;
        merged.c *= scale_;
        merged.constant *= scale_;
        merged_ = std::move(merged);
    }
}

double SumCost::value(const Vec& x) const {
    if (merged_) return 0.5 * x.dot(merged_->G * x) + merged_->c.dot(x) + merged_->constant;
    double v = 0.0;
    for (const auto& t : terms_) v += t->value(x);
    return scale_ * v;
}

Vec SumCost::subgradient(const Vec& x) const {
    Vec g = Vec::Zero(dim_);
    for (const auto& t : terms_) g += t->subgradient(x);
    return scale_ * g;
}

Vec SumCost::solve_x(const Mat& hessian, const Vec& linear) const {
    if (!merged_) throw Error("SumCost::solve_x: only sums of quadratic costs have an exact solver");
    return solve_positive_definite(merged_->G + hessian, linear - merged_->c, kNonUniqueX);
}

// ---- regularizers ------------------------------------------------------

std::optional<double> scalar_multiple_of_identity(const Mat& H) {
    if (H.rows() != H.cols() || H.rows() == 0) return std::nullopt;
    const double rho = H.trace() / static_cast<double>(H.rows());
    if (!(rho > 0.0)) return std::nullopt;
    const Mat diff = H - rho * Mat::Identity(H.rows(), H.cols());
    if (diff.cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, rho)) return std::nullopt;
    return rho;
}

ZeroRegularizer::ZeroRegularizer(Eigen::Index n) : n_(n), sigma_(PsdOperator::zero(n)) {}

double ZeroRegularizer::value(const Vec& z) const {
    check_dim(z.size(), n_, "ZeroRegularizer::value");
    return 0.0;
}

Vec ZeroRegularizer::subgradient(const Vec& z) const {
    check_dim(z.size(), n_, "ZeroRegularizer::subgradient");
    return Vec::Zero(n_);
}

double ZeroRegularizer::subdiff_distance(const Vec&, const Vec& v) const { return v.norm(); }

Vec ZeroRegularizer::solve_z(const Mat& hessian, const Vec& linear) const {
    return solve_positive_definite(hessian, linear, kNonUniqueZ);
}

RegularizerPtr ZeroRegularizer::scaled(double s) const {
    require(s > 0.0, "Regularizer::scaled: factor must be positive");
    return std::make_shared<ZeroRegularizer>(n_);
}

QuadraticRegularizer::QuadraticRegularizer(const Mat& Q, Vec q) : Q_(Q), q_(std::move(q)) {
    check_dim(Q_.dim(), q_.size(), "QuadraticRegularizer");
    require_finite(q_, "QuadraticRegularizer q");
}

double QuadraticRegularizer::value(const Vec& z) const {
    check_dim(z.size(), dim(), "QuadraticRegularizer::value");
    return 0.5 * z.dot(Q_.matrix() * z) + q_.dot(z);
}

Vec QuadraticRegularizer::subgradient(const Vec& z) const { return Q_.matrix() * z + q_; }

double QuadraticRegularizer::subdiff_distance(const Vec& z, const Vec& v) const {
    return (v - subgradient(z)).norm();
}

Vec QuadraticRegularizer::solve_z(const Mat& hessian, const Vec& linear) const {
    return solve_positive_definite(Q_.matrix() + hessian, linear - q_, kNonUniqueZ);
}

RegularizerPtr QuadraticRegularizer::scaled(double s) const {
    require(s > 0.0, "Regularizer::scaled: factor must be positive");
    return std::make_shared<QuadraticRegularizer>(s * Q_.matrix(), s * q_);
}

AffineIndicator::AffineIndicator(Mat C, Vec d) : C_(std::move(C)), d_(std::move(d)) {
    require(C_.rows() == d_.size(), "AffineIndicator: C and d disagree");
    require_finite(C_, "AffineIndicator C");
    require_finite(d_, "AffineIndicator d");
    sigma_ = PsdOperator::zero(C_.cols());
    if (C_.rows() > 0) {
        Eigen::JacobiSVD<Mat> svd(C_, Eigen::ComputeFullU | Eigen::ComputeFullV);
        svd.setThreshold(1e-12);
        const auto rank = svd.rank();
        particular_ = svd.solve(d_);
        require((C_ * particular_ - d_).norm() <= 1e-9 * std::max(1.0, d_.norm()),
                "AffineIndicator: the affine set is empty");
        null_basis_ = svd.matrixV().rightCols(C_.cols() - rank);
    } else {
        particular_ = Vec::Zero(C_.cols());
        null_basis_ = Mat::Identity(C_.cols(), C_.cols());
    }
}

double AffineIndicator::value(const Vec& z) const {
    check_dim(z.size(), dim(), "AffineIndicator::value");
    const double viol = (C_ * z - d_).norm();
    return viol <= 1e-9 * std::max(1.0, d_.norm()) ? 0.0 : kInfinity;
}

Vec AffineIndicator::subgradient(const Vec& z) const {
    check_dim(z.size(), dim(), "AffineIndicator::subgradient");
    return Vec::Zero(dim());
}

double AffineIndicator::subdiff_distance(const Vec& z, const Vec& v) const {
    if (value(z) == kInfinity) return kInfinity;
    // ∂g(z) = range(Cᵀ); the distance is the component in null(C).
    return (null_basis_.transpose() * v).norm();
}

Vec AffineIndicator::solve_z(const Mat& hessian, const Vec& linear) const {
    check_dim(linear.size(), dim(), "AffineIndicator::solve_z");
    if (null_basis_.cols() == 0) return particular_;
    const Mat reduced = null_basis_.transpose() * hessian * null_basis_;
    const Vec rhs = null_basis_.transpose() * (linear - hessian * particular_);
    return particular_ + null_basis_ * solve_positive_definite(reduced, rhs, kNonUniqueZ);
}

Vec AffineIndicator::feasible_perturbation(const Vec& z, const Vec& d, double eps) const {
    return z + eps * (null_basis_ * (null_basis_.transpose() * d));
}

RegularizerPtr AffineIndicator::scaled(double s) const {
    require(s > 0.0, "Regularizer::scaled: factor must be positive");
    return std::make_shared<AffineIndicator>(C_, d_);
}

SetIndicator::SetIndicator(SimpleSet set) : set_(std::move(set)), sigma_(PsdOperator::zero(set_.dim())) {}

double SetIndicator::value(const Vec& z) const {
    check_dim(z.size(), dim(), "SetIndicator::value");
    return contains(set_, z, 1e-12) ? 0.0 : kInfinity;
}

Vec SetIndicator::subgradient(const Vec& z) const {
    check_dim(z.size(), dim(), "SetIndicator::subgradient");
    return Vec::Zero(dim());
}

double SetIndicator::subdiff_distance(const Vec& z, const Vec& v) const {
    if (value(z) == kInfinity) return kInfinity;
    return normal_cone_distance(set_, z, v);
}

Vec SetIndicator::solve_z(const Mat& hessian, const Vec& linear) const {
    check_dim(linear.size(), dim(), "SetIndicator::solve_z");
    return project(set_, linear / prox_scalar(hessian));
}

Vec SetIndicator::feasible_perturbation(const Vec& z, const Vec& d, double eps) const {
    return project(set_, z + eps * d);
}

RegularizerPtr SetIndicator::scaled(double s) const {
    require(s > 0.0, "Regularizer::scaled: factor must be positive");
    return std::make_shared<SetIndicator>(set_);
}

L1Regularizer::L1Regularizer(Eigen::Index n, double weight)
    : n_(n), weight_(weight), sigma_(PsdOperator::zero(n)) {
    require(weight >= 0.0 && std::isfinite(weight), "L1Regularizer: weight must be finite and >= 0");
}

double L1Regularizer::value(const Vec& z) const {
    check_dim(z.size(), n_, "L1Regularizer::value");
    return weight_ * z.lpNorm<1>();
}

Vec L1Regularizer::subgradient(const Vec& z) const {
    check_dim(z.size(), n_, "L1Regularizer::subgradient");
    return weight_ * z.array().sign().matrix();
}

double L1Regularizer::subdiff_distance(const Vec& z, const Vec& v) const {
    double sq = 0.0;
    for (Eigen::Index i = 0; i < n_; ++i) {
        const double d = z(i) == 0.0 ? std::max(std::abs(v(i)) - weight_, 0.0)
                                     : v(i) - weight_ * (z(i) > 0 ? 1.0 : -1.0);
        sq += d * d;
    }
    return std::sqrt(sq);
}

Vec L1Regularizer::solve_z(const Mat& hessian, const Vec& linear) const {
    check_dim(linear.size(), n_, "L1Regularizer::solve_z");
    const double rho = prox_scalar(hessian);
    const double thr = weight_ / rho;
    Vec v = linear / rho;
    for (Eigen::Index i = 0; i < n_; ++i) {
        const double a = std::abs(v(i)) - thr;
        v(i) = a > 0.0 ? std::copysign(a, v(i)) : 0.0;
    }
    return v;
}

RegularizerPtr L1Regularizer::scaled(double s) const {
    require(s > 0.0, "Regularizer::scaled: factor must be positive");
    return std::make_shared<L1Regularizer>(n_, s * weight_);
}

// ---- streams -----------------------------------------------------------

OnlineStream::OnlineStream(std::size_t horizon, std::uint64_t seed, Eigen::Index dim, Generator gen)
    : horizon_(horizon), seed_(seed), dim_(dim), gen_(std::move(gen)) {
    require(horizon_ >= 1, "OnlineStream: horizon must be at least 1");
    require(static_cast<bool>(gen_), "OnlineStream: missing generator");
}

CostPtr OnlineStream::cost(std::size_t round) const {
    require(round >= 1, "OnlineStream::cost: rounds are 1-based");
    auto c = gen_(round);
    require(c && c->dim() == dim_, "OnlineStream::cost: generator returned a cost of the wrong dimension");
    return c;
}

std::mt19937_64 round_engine(std::uint64_t seed, std::uint64_t round, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(round), static_cast<std::uint32_t>(round >> 32),
                      static_cast<std::uint32_t>(tag)};
    return std::mt19937_64(seq);
}

namespace {

enum StreamTag : std::uint64_t { kTagHessian = 1, kTagLinear = 2 };

Mat uniform_matrix(std::mt19937_64& eng, Eigen::Index rows, Eigen::Index cols, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat m(rows, cols);
    // Column-major fill order is part of the stream definition.
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = u(eng);
    return m;
}

}  // namespace

OnlineStream make_quadratic_stream(const QuadraticStreamParams& p) {
    require(p.n >= 1, "quadratic stream: n must be positive");
    require(p.G_scale >= 0.0 && p.c_scale >= 0.0, "quadratic stream: scales must be non-negative");
    auto gen = [p](std::size_t round) -> CostPtr {
        auto eng_g = round_engine(p.seed, p.fixed_G ? 0 : round, kTagHessian);
        const Mat M = uniform_matrix(eng_g, p.n, p.n, p.G_scale);
        auto eng_c = round_engine(p.seed, round, kTagLinear);
        const Mat c = uniform_matrix(eng_c, p.n, 1, p.c_scale);
        return std::make_shared<QuadraticCost>(M.transpose() * M, c.col(0), 0.0, p.sigma);
    };
    return OnlineStream(p.N, p.seed, p.n, std::move(gen));
}

OnlineStream make_linear_stream(Eigen::Index n, std::size_t N, std::uint64_t seed, double c_scale) {
    require(n >= 1, "linear stream: n must be positive");
    auto gen = [n, seed, c_scale](std::size_t round) -> CostPtr {
        auto eng = round_engine(seed, round, kTagLinear);
        return QuadraticCost::linear(uniform_matrix(eng, n, 1, c_scale).col(0));
    };
    return OnlineStream(N, seed, n, std::move(gen));
}

namespace {

std::vector<CostPtr> materialize(const OnlineStream& stream) {
    std::vector<CostPtr> costs;
    costs.reserve(stream.horizon());
    for (std::size_t t = 1; t <= stream.horizon(); ++t) costs.push_back(stream.cost(t));
    return costs;
}

}  // namespace

OfflineProblem aggregate_problem(const OnlineStream& stream, const RegularizerPtr& g,
                                 const CouplingConstraint& cc) {
    require(g != nullptr, "aggregate_problem: missing regularizer");
    const double N = static_cast<double>(stream.horizon());
    return {std::make_shared<SumCost>(materialize(stream)), g->scaled(N), cc};
}

OfflineProblem averaged_problem(const OnlineStream& stream, const RegularizerPtr& g,
                                const CouplingConstraint& cc) {
    require(g != nullptr, "averaged_problem: missing regularizer");
    const double N = static_cast<double>(stream.horizon());
    return {std::make_shared<SumCost>(materialize(stream), 1.0 / N), g, cc};
}

}  // namespace ospadmm
