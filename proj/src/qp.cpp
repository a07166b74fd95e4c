#include "ospadmm/qp.hpp"

#include <cmath>

namespace ospadmm {

double choose_alpha(const std::vector<Mat>& hessians, const Mat& A, std::size_t N) {
    require(!hessians.empty(), "choose_alpha: empty cost family");
    require(N >= 1, "choose_alpha: N must be positive");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
    const Mat AtA = A.transpose() * A;
    double worst = -kInfinity;
    for (const auto& G : hessians) {
        require(G.rows() == AtA.rows(), "choose_alpha: dimension mismatch");
        worst = std::max(worst, symmetric_eigen_range(inv_sqrt_n * G + AtA).max);
    }
    return std::max(worst, 0.0) + 1e-8;
}

PsdOperator build_S_t(const Mat& G, const Mat& A, std::size_t N, double alpha) {
    const Eigen::Index n = G.rows();
    require(A.cols() == n, "build_S_t: dimension mismatch");
    const Mat S = alpha * Mat::Identity(n, n) - G / std::sqrt(static_cast<double>(N)) - A.transpose() * A;
    try {
        return PsdOperator(S);
    } catch (const Error& e) {
        throw Error(std::string("build_S_t: alpha too small (") + e.what() + ")");
    }
}

SolverState QpState::to_solver_state(const Vec& z_prev) const {
    SolverState s;
    s.x = x;
    s.z = z;
    s.z_prev = z_prev;
    s.y = concat(mu, lambda);
    s.k = k;
    return s;
}

QpState QpState::from_solver_state(const SolverState& s, Eigen::Index m) {
    QpState q;
    q.x = s.x;
    q.z = s.z;
    q.mu = s.y.head(m);
    q.lambda = s.y.tail(s.y.size() - m);
    q.k = s.k;
    return q;
}

Vec qp_x_update(const QpState& state, const QuadraticCost& cost, const Mat& A, const Vec& b, const Mat& S_k,
                std::size_t N, double alpha) {
    const double sqrt_n = std::sqrt(static_cast<double>(N));
    return (-cost.c() - A.transpose() * state.mu - state.lambda) / ((alpha + 1.0) * sqrt_n) +
           (A.transpose() * b + state.z + S_k * state.x) / (alpha + 1.0);
}

Vec qp_z_update(const QpState& state, const Vec& x_new, const SimpleSet& X, std::size_t N) {
    return project(X, x_new + state.lambda / std::sqrt(static_cast<double>(N)));
}

CouplingConstraint qp_constraint(const Mat& A, const Vec& b) {
    const Eigen::Index m = A.rows(), n = A.cols();
    require(b.size() == m, "qp_constraint: A and b disagree");
    Mat As(m + n, n), Bs(m + n, n);
    As << A, Mat::Identity(n, n);
    Bs << Mat::Zero(m, n), -Mat::Identity(n, n);
    Vec cs(m + n);
    cs << b, Vec::Zero(n);
    return CouplingConstraint(LinearMap(As), LinearMap(Bs), cs);
}

std::shared_ptr<const QuadraticCost> QpInstance::quad_cost(std::size_t round) const {
    auto c = std::dynamic_pointer_cast<const QuadraticCost>(stream.cost(round));
    require(c != nullptr, "QpInstance: stream produced a non-quadratic cost");
    return c;
}

PsdOperator QpInstance::S(std::size_t round) const {
    return build_S_t(quad_cost(round)->G().matrix(), A, N(), alpha);
}

SolverConfig QpInstance::solver_config(double tau) const {
    SolverConfig cfg;
    cfg.sigma = default_sigma(N());
    cfg.tau = tau;
    cfg.T = PsdOperator::zero(config.n);
    cfg.scaling = ProximalScaling::Online;
    const QpInstance self = *this;
    cfg.s_schedule = [self](std::size_t k) { return self.S(k); };
    return cfg;
}

SolverState QpInstance::initial_state() const {
    const Vec x1 = project(config.X, Vec::Zero(config.n));
    return SolverState::initial(x1, x1, Vec::Zero(config.m + config.n));
}

Stepper QpInstance::closed_form_stepper(const SolverConfig& cfg) const {
    require(std::abs(cfg.sigma - default_sigma(N())) <= 1e-15 * cfg.sigma,
            "closed-form QP updates require sigma = sqrt(N)");
    const QpInstance self = *this;
    return [self, cfg](const Cost& f, const SolverState& s) -> std::pair<SolverState, StepRecord> {
        const auto* quad = dynamic_cast<const QuadraticCost*>(&f);
        require(quad != nullptr, "closed-form QP step needs a quadratic cost");
        const QpState q = QpState::from_solver_state(s, self.config.m);
        const Mat S = build_S_t(quad->G().matrix(), self.A, self.N(), self.alpha).matrix();
        StepRecord rec;
        rec.x_new = qp_x_update(q, *quad, self.A, self.b, S, self.N(), self.alpha);
        rec.z_new = qp_z_update(q, rec.x_new, self.config.X, self.N());
        rec.y_new = dual_update(s, cfg, self.cc, rec.x_new, rec.z_new);
        rec.loss = f.value(rec.x_new) + self.g->value(rec.z_new);
        rec.residual = residual(self.cc, rec.x_new, rec.z_new);
        SolverState next;
        next.x = rec.x_new;
        next.z = rec.z_new;
        next.z_prev = s.z;
        next.y = rec.y_new;
        next.k = s.k + 1;
        return {std::move(next), std::move(rec)};
    };
}

namespace {

enum InstanceTag : std::uint64_t { kTagConstraint = 11, kTagInterior = 12, kTagOffline = 13 };

Vec interior_point(const SimpleSet& X, std::mt19937_64& eng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Eigen::Index n = X.dim();
    Vec v(n);
    switch (X.kind) {
        case SimpleSet::Kind::Box:
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) = 0.5 * (X.lo(i) + X.hi(i)) + 0.25 * (X.hi(i) - X.lo(i)) * u(eng);
            return v;
        case SimpleSet::Kind::Ball: {
            for (Eigen::Index i = 0; i < n; ++i) v(i) = u(eng);
            const double norm = v.norm();
            return X.center + (norm > 0 ? Vec(0.5 * X.radius * v / std::max(norm, 1.0)) : v);
        }
        case SimpleSet::Kind::Simplex: {
            for (Eigen::Index i = 0; i < n; ++i) v(i) = 1.5 + u(eng);
            return v / v.sum();
        }
    }
    return v;
}

}  // namespace

QpInstance make_qp_instance(const QpGeneratorConfig& config) {
    require(config.n >= 1 && config.m >= 0, "QP generator: need n >= 1 and m >= 0");
    require(config.X.dim() == config.n, "QP generator: X dimension differs from n");
    require(config.N >= 1, "QP generator: N must be positive");

    auto eng_a = round_engine(config.seed, 0, kTagConstraint);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat A(config.m, config.n);
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, j) = u(eng_a);
    auto eng_x = round_engine(config.seed, 0, kTagInterior);
    const Vec x0 = interior_point(config.X, eng_x);
    const Vec b = A * x0;

    QuadraticStreamParams sp;
    sp.n = config.n;
    sp.N = config.N;
    sp.seed = config.seed;
    sp.G_scale = config.G_scale;
    sp.c_scale = config.c_scale;
    sp.fixed_G = config.fixed_G;
    sp.sigma = config.sigma_op;
    OnlineStream stream = make_quadratic_stream(sp);

    std::vector<Mat> hessians;
    hessians.reserve(config.N + 1);
    for (std::size_t t = 1; t <= config.N + 1; ++t) {
        hessians.push_back(std::static_pointer_cast<const QuadraticCost>(stream.cost(t))->G().matrix());
    }
    const double alpha = choose_alpha(hessians, A, config.N);

    return QpInstance{config, A, b, x0, stream, qp_constraint(A, b),
                      std::make_shared<SetIndicator>(config.X), alpha};
}

SolverConfig OfflineQpInstance::solver_config(double sigma, double tau) const {
    SolverConfig c;
    c.sigma = sigma;
    c.tau = tau;
    c.T = T;
    c.s_schedule = constant_schedule(S);
    c.scaling = ProximalScaling::Offline;
    return c;
}

SolverState OfflineQpInstance::feasible_start() const {
    const auto& cc = problem.cc;
    const Vec x1 = cc.A.matrix().completeOrthogonalDecomposition().solve(cc.c);
    return SolverState::initial(x1, Vec::Zero(cc.z_dim()), Vec::Zero(cc.y_dim()));
}

OfflineQpInstance make_offline_qp(const OfflineQpConfig& config) {
    require(config.n >= 1 && config.p >= 1 && config.m >= 1 && config.m <= config.n,
            "offline QP generator: need 1 <= m <= n and p >= 1");
    require(config.quadratic_g || config.p <= config.m, "offline QP generator: zero g needs p <= m");
    require(config.S_scale >= 0.0 && config.T_scale >= 0.0, "offline QP generator: scales must be non-negative");
    auto eng = round_engine(config.seed, 0, kTagOffline);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto draw = [&](Eigen::Index r, Eigen::Index c) {
        Mat M(r, c);
        for (Eigen::Index j = 0; j < c; ++j)
            for (Eigen::Index i = 0; i < r; ++i) M(i, j) = u(eng);
        return M;
    };
    const Eigen::Index n = config.n, p = config.p, m = config.m;
    const Mat M = draw(n, n);
    const Mat G = M.transpose() * M + 0.1 * Mat::Identity(n, n);
    const Vec a = draw(n, 1);
    Mat A = draw(m, n);
    // Full row rank: add a multiple of a coordinate selector.
    A.leftCols(m) += 2.0 * Mat::Identity(m, m);
    const Mat B = draw(m, p);
    const Vec c = A * draw(n, 1) + B * draw(p, 1);
    const Mat R = draw(n, n);

    OfflineQpInstance inst;
    inst.config = config;
    inst.a = a;
    auto f = std::make_shared<QuadraticCost>(G, -(G * a), 0.5 * a.dot(G * a), config.sigma_op);
    RegularizerPtr g;
    if (config.quadratic_g) {
        const Mat Q = draw(p, p);
        g = std::make_shared<QuadraticRegularizer>(Q.transpose() * Q, Vec::Zero(p));
    } else {
        g = std::make_shared<ZeroRegularizer>(p);
    }
    inst.problem = OfflineProblem{f, g, CouplingConstraint(LinearMap(A), LinearMap(B), c)};
    inst.S = PsdOperator(config.S_scale * R.transpose() * R);
    inst.T = PsdOperator(config.T_scale * Mat::Identity(p, p));
    return inst;
}

}  // namespace ospadmm
