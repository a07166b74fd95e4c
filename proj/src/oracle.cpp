#include "ospadmm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ospadmm {

double KktTriple::max_residual() const {
    return std::max({dual_x_residual, dual_z_residual, primal_residual});
}

KktTriple certify_kkt(const OfflineProblem& problem, Vec x, Vec z, Vec y) {
    const auto& cc = problem.cc;
    KktTriple k;
    k.dual_x_residual = (problem.f->subgradient(x) + cc.A.apply_adjoint(y)).norm();
    k.dual_z_residual = problem.g->subdiff_distance(z, -cc.B.apply_adjoint(y));
    k.primal_residual = residual(cc, x, z);
    k.x = std::move(x);
    k.z = std::move(z);
    k.y = std::move(y);
    return k;
}

std::string method_name(OracleMethod m) {
    return m == OracleMethod::AnalyticKkt ? "analytic-kkt" : "converged-spadmm";
}

namespace {

struct SaddleSolution {
    Vec x;
    Vec z;
    Vec y;
};

SaddleSolution solve_saddle(const OfflineProblem& problem, bool min_norm) {
    const auto fq = problem.f->quadratic_form();
    const auto& g = *problem.g;
    if (!fq || !g.analytic()) throw Error("unsupported analytic form");
    const auto& cc = problem.cc;
    const Eigen::Index n = cc.x_dim(), p = cc.z_dim(), m = cc.y_dim();

    Mat Qg = Mat::Zero(p, p);
    Vec qg = Vec::Zero(p);
    Mat C(0, p);
    Vec d(0);
    if (const auto* quad = dynamic_cast<const QuadraticRegularizer*>(&g)) {
        Qg = quad->Q().matrix();
        qg = quad->q();
    } else if (const auto* aff = dynamic_cast<const AffineIndicator*>(&g)) {
        C = aff->C();
        d = aff->d();
    } else if (!dynamic_cast<const ZeroRegularizer*>(&g)) {
        throw Error("unsupported analytic form");
    }

    const Eigen::Index nw = n + p, nc = m + C.rows();
    Mat K = Mat::Zero(nw + nc, nw + nc);
    K.topLeftCorner(n, n) = fq->G;
    K.block(n, n, p, p) = Qg;
    Mat E = Mat::Zero(nc, nw);
    E.topLeftCorner(m, n) = cc.A.matrix();
    E.topRightCorner(m, p) = cc.B.matrix();
    E.bottomRightCorner(C.rows(), p) = C;
    K.topRightCorner(nw, nc) = E.transpose();
    K.bottomLeftCorner(nc, nw) = E;
    Vec rhs(nw + nc);
    rhs << -fq->c, -qg, cc.c, d;

    Eigen::FullPivLU<Mat> lu(K);
    lu.setThreshold(1e-12);
    Vec sol;
    if (lu.isInvertible()) {
        sol = lu.solve(rhs);
    } else if (min_norm) {
        sol = K.completeOrthogonalDecomposition().solve(rhs);
    } else {
        throw Error("singular saddle system");
    }
    return {sol.head(n), sol.segment(n, p), sol.segment(nw, m)};
}

// Offline iteration with S = T = 0 and the x-system factorized once.
OfflineOptimum converged_spadmm(const OfflineProblem& problem, const OracleOptions& opt) {
    validate_tau(opt.tau);
    const auto& cc = problem.cc;
    const auto& g = *problem.g;
    const Mat& A = cc.A.matrix();
    const Mat& B = cc.B.matrix();
    const double sigma = opt.sigma;

    const Mat Hx = sigma * A.transpose() * A;
    const Mat Hz = sigma * B.transpose() * B;
    std::function<Vec(const Vec&)> solve_x;
    if (const auto fq = problem.f->quadratic_form()) {
        const Mat K = fq->G + Hx;
        // Validates uniqueness once; the factorization below is then reused.
        solve_positive_definite(K, Vec::Zero(K.rows()),
                                "non-unique x-subproblem: well-posedness requires Σ_f + σS_k + σA*A ≻ 0");
        auto llt = std::make_shared<Eigen::LLT<Mat>>(K);
        const Vec c = fq->c;
        solve_x = [llt, c](const Vec& q) -> Vec { return llt->solve(q - c); };
    } else {
        solve_x = [&](const Vec& q) { return problem.f->solve_x(Hx, q); };
    }
    std::function<Vec(const Vec&)> solve_z;
    const auto* zero_g = dynamic_cast<const ZeroRegularizer*>(&g);
    const auto* quad_g = dynamic_cast<const QuadraticRegularizer*>(&g);
    if (zero_g || quad_g) {
        const Mat K = quad_g ? Mat(quad_g->Q().matrix() + Hz) : Hz;
        const Vec q0 = quad_g ? quad_g->q() : Vec::Zero(cc.z_dim());
        solve_positive_definite(K, Vec::Zero(K.rows()),
                                "non-unique z-subproblem: well-posedness requires Σ_g + T + σB*B ≻ 0");
        auto llt = std::make_shared<Eigen::LLT<Mat>>(K);
        solve_z = [llt, q0](const Vec& q) -> Vec { return llt->solve(q - q0); };
    } else {
        solve_z = [&](const Vec& q) { return g.solve_z(Hz, q); };
    }

    Vec x = Vec::Zero(cc.x_dim());
    Vec z = g.solve_z(Hz + Mat::Identity(cc.z_dim(), cc.z_dim()), Vec::Zero(cc.z_dim()));
    Vec y = Vec::Zero(cc.y_dim());
    double primal = kInfinity, change = kInfinity;
    for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
        const Vec xn = solve_x(-A.transpose() * y - sigma * A.transpose() * (B * z - cc.c));
        const Vec zn = solve_z(-B.transpose() * y - sigma * B.transpose() * (A * xn - cc.c));
        const Vec r = A * xn + B * zn - cc.c;
        const Vec yn = y + opt.tau * sigma * r;
        primal = r.norm();
        change = std::sqrt((xn - x).squaredNorm() + (zn - z).squaredNorm() + (yn - y).squaredNorm());
        x = xn;
        z = zn;
        y = yn;
        if (std::max(primal, change) <= opt.tol) {
            OfflineOptimum out;
            out.value = problem.value(x, z);
            out.method = OracleMethod::ConvergedSpadmm;
            out.kkt = certify_kkt(problem, x, z, y);
            out.x = std::move(x);
            out.z = std::move(z);
            out.iterations = it;
            return out;
        }
    }
    throw OracleNotConverged("converged-spadmm oracle did not converge (primal residual " +
                                 std::to_string(primal) + ", iterate change " + std::to_string(change) + ")",
                             primal, change);
}

}  // namespace

KktTriple kkt_triple(const OfflineProblem& problem) {
    auto s = solve_saddle(problem, false);
    return certify_kkt(problem, std::move(s.x), std::move(s.z), std::move(s.y));
}

KktTriple kkt_triple_min_norm(const OfflineProblem& problem) {
    auto s = solve_saddle(problem, true);
    auto k = certify_kkt(problem, std::move(s.x), std::move(s.z), std::move(s.y));
    if (k.max_residual() > 1e-9) throw Error("saddle system has no solution (KKT residual " +
                                             std::to_string(k.max_residual()) + ")");
    return k;
}

OfflineOptimum solve_offline(const OfflineProblem& problem, OracleMethod method, const OracleOptions& options) {
    if (method == OracleMethod::ConvergedSpadmm) return converged_spadmm(problem, options);
    OfflineOptimum out;
    out.kkt = kkt_triple(problem);
    out.x = out.kkt.x;
    out.z = out.kkt.z;
    out.value = problem.value(out.x, out.z);
    out.method = OracleMethod::AnalyticKkt;
    return out;
}

LowerBoundCheck lower_bound_check(const OfflineProblem& problem, const OfflineOptimum& opt, std::uint64_t seed,
                                  int samples) {
    const Mat E = problem.cc.stacked();
    const Eigen::Index n = problem.cc.x_dim(), p = problem.cc.z_dim();
    Mat null_basis;
    if (E.rows() == 0) {
        null_basis = Mat::Identity(n + p, n + p);
    } else {
        Eigen::FullPivLU<Mat> lu(E);
        lu.setThreshold(1e-12);
        null_basis = lu.kernel();
        if (lu.dimensionOfKernel() == 0) null_basis = Mat::Zero(n + p, 0);
    }
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> nd;
    LowerBoundCheck out;
    out.min_gap = kInfinity;
    const Vec w_bar = concat(opt.x, opt.z);
    for (int s = 0; s < samples; ++s) {
        Vec coef(null_basis.cols());
        for (Eigen::Index i = 0; i < coef.size(); ++i) coef(i) = nd(eng);
        Vec dir = null_basis * coef;
        if (dir.norm() > 0) dir /= dir.norm();
        double t = 1.0;
        for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
            const Vec w = w_bar + t * dir;
            const double v = problem.value(w.head(n), w.tail(p));
            if (v != kInfinity) {
                out.min_gap = std::min(out.min_gap, v - opt.value);
                ++out.samples;
                break;
            }
        }
    }
    return out;
}

}  // namespace ospadmm
