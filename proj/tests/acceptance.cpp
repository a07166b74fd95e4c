// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ospadmm/commands.hpp"
#include "support.hpp"

using namespace ospadmm;
using namespace ospadmm::testing;

namespace {

constexpr double kTol = 1e-8;  // relative slack tolerance for every certified inequality

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) {
        o.pass = false;
        o.detail += "; over time budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s (%.2fs, budget %.0fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
                limit_s);
    std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const double kTaus[] = {0.5, 1.0, 1.5, 1.617};

// Criterion 1 suite: instance i, N = 200, σ = √N.
QpGeneratorConfig suite_instance(int i) {
    auto gc = qp_config(1000 + static_cast<std::uint64_t>(i), 200, 3 + i % 4, 1 + i % 3);
    if (i % 3 == 1) gc.X = SimpleSet::ball(Vec::Zero(gc.n), 1.0);
    if (i % 3 == 2) gc.X = SimpleSet::simplex(gc.n);
    return gc;
}

Outcome descent_suite() {
    const int instances = 100;
    int runs = 0, bad = 0, rounds_checked = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::string first_bad;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : runs, bad, rounds_checked) reduction(min : worst)
    for (int i = 0; i < instances; ++i) {
        for (double tau : kTaus) {
            const auto setup = qp_setup(suite_instance(i), tau);
            AuditOptions ao;
            ao.parallel = false;
            const auto ex = run_online_experiment(setup, ao);
            ++runs;
            int asserted = 0;
            for (const auto& c : ex.audit.checks) asserted += c.id == "descent" && c.asserted;
            const double w = worst_relative_slack(ex.audit.checks, "descent");
            worst = std::min(worst, w);
            rounds_checked += asserted;
            if (!ex.audit.error.empty() || asserted != 200 || w < -kTol) {
                ++bad;
#pragma omp critical
                if (first_bad.empty())
                    first_bad = "instance " + std::to_string(i) + " tau " + fmt("%g", tau) +
                                (ex.audit.error.empty() ? "" : ": " + ex.audit.error);
            }
        }
    }
    std::string d = std::to_string(runs) + " runs, " + std::to_string(rounds_checked) +
                    " rounds checked, min relative slack " + fmt("%.3e", worst);
    if (bad) d += ", " + std::to_string(bad) + " bad runs (first: " + first_bad + ")";
    return {bad == 0 && runs == 400, d};
}

// Random operator piece: positive definite, rank-deficient PSD, or zero.
Mat random_piece(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> nd;
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 2) return Mat::Zero(n, n);
    const Eigen::Index rank = kind == 0 ? n : static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
    Mat R(std::max<Eigen::Index>(rank, 1), n);
    for (Eigen::Index i = 0; i < R.size(); ++i) R.data()[i] = nd(rng);
    if (rank == 0) R.setZero();
    Mat P = R.transpose() * R;
    if (kind == 0) P += 0.05 * Mat::Identity(n, n);
    return P;
}

Outcome pd_equivalence_draws() {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> nd;
    int agree = 0, all_true = 0, all_false = 0, indefinite_rejected = 0, indefinite = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const Eigen::Index p = 1 + static_cast<Eigen::Index>(rng() % 3);
        const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng() % 4);
        Mat A(m, n), B(m, p);
        for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = nd(rng);
        for (Eigen::Index i = 0; i < B.size(); ++i) B.data()[i] = nd(rng);
        if (rng() % 4 == 0) A.setZero();
        if (rng() % 4 == 0) B.setZero();
        Mat S = random_piece(rng, n);
        if (draw % 10 == 0) {
            // indefinite candidate: must be refused as a PSD operator
            ++indefinite;
            Mat D = S;
            D(0, 0) -= 1.0 + S.norm();
            try {
                PsdOperator bad(D);
            } catch (const Error&) {
                ++indefinite_rejected;
            }
        }
        SolverConfig cfg;
        cfg.sigma = std::exp(nd(rng));
        cfg.tau = 0.05 + 1.55 * std::uniform_real_distribution<double>()(rng);
        cfg.T = PsdOperator(random_piece(rng, p));
        cfg.scaling = draw % 2 ? ProximalScaling::Online : ProximalScaling::Offline;
        const CouplingConstraint cc(LinearMap(A), LinearMap(B), Vec::Zero(m));
        const auto b = assemble_operators(cfg, PsdOperator(S), PsdOperator(random_piece(rng, n)),
                                          PsdOperator(random_piece(rng, p)), cc);
        agree += b.pd_equivalence();
        all_true += b.blocks_pd && b.M_bar_pd && b.H_bar_pd;
        all_false += !b.blocks_pd && !b.M_bar_pd && !b.H_bar_pd;
    }
    const std::string d = std::to_string(agree) + "/1000 agree (" + std::to_string(all_true) + " all PD, " +
                          std::to_string(all_false) + " all not PD), " + std::to_string(indefinite_rejected) + "/" +
                          std::to_string(indefinite) + " indefinite pieces rejected";
    return {agree == 1000 && indefinite_rejected == indefinite && all_true > 0 && all_false > 0, d};
}

Outcome closed_form_rounds() {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> nd;
    double worst_x = 0.0, worst_z = 0.0;
    int rounds = 0;
    for (int i = 0; i < 100; ++i, ++rounds) {
        auto gc = suite_instance(i);
        gc.N = 16 + static_cast<std::size_t>(i) * 7;
        const auto qp = make_qp_instance(gc);
        const auto cfg = qp.solver_config(kTaus[i % 4]);
        const Eigen::Index n = gc.n, m = gc.m;
        SolverState st;
        st.x = Vec(n), st.z = Vec(n), st.y = Vec(m + n);
        for (Eigen::Index j = 0; j < n; ++j) st.x(j) = nd(rng), st.z(j) = nd(rng);
        for (Eigen::Index j = 0; j < m + n; ++j) st.y(j) = nd(rng);
        st.z_prev = st.z;
        st.k = 1 + static_cast<std::size_t>(i) % gc.N;
        const auto qs = QpState::from_solver_state(st, m);
        const auto f = qp.quad_cost(st.k);
        const Vec xc = qp_x_update(qs, *f, qp.A, qp.b, qp.S(st.k).matrix(), qp.N(), qp.alpha);
        const Vec xg = x_update(*f, st, cfg, qp.cc);
        const Vec zc = qp_z_update(qs, xc, gc.X, qp.N());
        const Vec zg = z_update(*qp.g, xc, st, cfg, qp.cc);
        worst_x = std::max(worst_x, (xc - xg).lpNorm<Eigen::Infinity>());
        worst_z = std::max(worst_z, (zc - zg).lpNorm<Eigen::Infinity>());
    }
    return {rounds == 100 && worst_x <= 1e-10 && worst_z <= 1e-10,
            std::to_string(rounds) + " rounds, max |x diff| " + fmt("%.2e", worst_x) + ", max |z diff| " +
                fmt("%.2e", worst_z)};
}

const BoundRecord* find(const std::vector<BoundRecord>& v, const std::string& id) {
    for (const auto& b : v)
        if (b.id == id) return &b;
    return nullptr;
}

Outcome sqrtN_regret() {
    const std::size_t Ns[] = {100, 400, 1600, 6400};
    double ratio_first = 0.0, ratio_last = 0.0;
    bool ok = true;
    std::ostringstream d;
    for (std::size_t N : Ns) {
        auto gc = qp_config(7, N);
        gc.fixed_G = true;
        const auto ex = run_online_experiment(qp_setup(gc, 1.0), {});
        const auto& a = ex.audit;
        const auto* obj = find(a.bounds, "objective_regret_sqrtN");
        const auto* ctr = find(a.bounds, "constraint_regret_sqrtN");
        const auto* ctr_u = find(a.bounds, "constraint_regret_sqrtN.unshifted");
        const bool certified = a.cert.s_lower_bound && a.cert.monotone;
        const bool here = a.error.empty() && certified && obj && ctr && ctr_u && obj->asserted && ctr->asserted &&
                          obj->check.passes(kTol) && ctr->check.passes(kTol) && ctr_u->check.passes(kTol) &&
                          a.failures(kTol).empty();
        ok = ok && here;
        const double r = a.regret_obj / std::sqrt(static_cast<double>(N));
        if (N == Ns[0]) ratio_first = r;
        ratio_last = r;
        d << "N=" << N << (here ? " ok" : " BAD");
        if (obj && ctr)
            d << " (obj " << fmt("%.3g", obj->check.lhs) << "<=" << fmt("%.3g", obj->check.rhs) << ", ctr "
              << fmt("%.3g", ctr->check.lhs) << "<=" << fmt("%.3g", ctr->check.rhs) << ")";
        if (!a.error.empty()) d << " error: " << a.error;
        d << "; ";
    }
    const bool growth = ratio_last <= 2.0 * ratio_first;
    d << "regret_obj/sqrtN " << fmt("%.4g", ratio_first) << " -> " << fmt("%.4g", ratio_last);
    return {ok && growth, d.str()};
}

Outcome fejer_recovery() {
    bool ok = true;
    int runs = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::string bad;
    for (double tau : {1.0, 1.617}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto inst = make_offline_qp({.n = 5, .p = 3, .m = 3, .seed = seed, .quadratic_g = true});
            const OfflineSetup setup{inst.problem, inst.solver_config(1.0, tau), inst.feasible_start(), 500};
            const auto ex = run_offline_experiment(setup, {});
            ++runs;
            const double w = worst_relative_slack(ex.audit.checks, "fejer");
            worst = std::min(worst, w);
            int fejer_rounds = 0;
            for (const auto& c : ex.audit.checks) fejer_rounds += c.id == "fejer" && c.asserted;
            const bool here = ex.audit.error.empty() && ex.audit.optimum.kkt.max_residual() <= 1e-9 &&
                              fejer_rounds == 500 && w >= -kTol && ex.audit.potentials_monotone;
            if (!here && bad.empty()) bad = " (first bad: tau " + fmt("%g", tau) + " seed " + std::to_string(seed) + ")";
            ok = ok && here;
        }
    }
    return {ok, std::to_string(runs) + " runs x 500 iterations, min relative slack " + fmt("%.3e", worst) +
                    ", potential monotone" + bad};
}

Outcome averaged_complexity() {
    bool ok = true;
    std::ostringstream d;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = make_offline_qp({.seed = seed, .quadratic_g = seed % 2 == 0});
        const OfflineSetup setup{inst.problem, inst.solver_config(20.0, 1.0), inst.feasible_start(), 400};
        const auto ex = run_offline_experiment(setup, {});
        const auto* gap = find(ex.audit.bounds, "averaged_objective_gap");
        const auto* vio = find(ex.audit.bounds, "averaged_constraint_violation");
        const bool here = ex.audit.error.empty() && gap && vio && gap->evaluated && vio->evaluated &&
                          gap->check.passes(kTol) && vio->check.passes(kTol);
        ok = ok && here;
        if (gap && vio)
            d << "seed " << seed << ": gap " << fmt("%.3g", gap->check.lhs) << "<=" << fmt("%.3g", gap->check.rhs)
              << ", viol " << fmt("%.3g", vio->check.lhs) << "<=" << fmt("%.3g", vio->check.rhs) << "; ";
    }
    return {ok, d.str()};
}

Outcome oracle_agreement() {
    double worst = 0.0;
    int ok_count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : worst) reduction(+ : ok_count)
    for (int i = 0; i < 50; ++i) {
        const Eigen::Index n = 2 + i % 9;
        const Eigen::Index m = 1 + i % static_cast<int>(n);
        OfflineQpConfig c{.n = n, .p = 1 + i % static_cast<int>(m), .m = m,
                          .seed = 500 + static_cast<std::uint64_t>(i), .quadratic_g = i % 2 == 0};
        const auto inst = make_offline_qp(c);
        const auto a = solve_offline(inst.problem, OracleMethod::AnalyticKkt);
        const auto b = solve_offline(inst.problem, OracleMethod::ConvergedSpadmm);
        const double diff = std::abs(a.value - b.value);
        worst = std::max(worst, diff);
        ok_count += diff <= 1e-7;
    }
    return {ok_count == 50, std::to_string(ok_count) + "/50 within 1e-7, max |diff| " + fmt("%.2e", worst)};
}

Outcome mutation_sensitivity() {
    const std::pair<Mutation, const char*> kinds[] = {{Mutation::X, "x"}, {Mutation::Z, "z"}, {Mutation::Dual, "dual"}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [kind, name] : kinds) {
        int broken = 0, runs = 0;
        for (int i = 0; i < 10 && broken == 0; ++i) {
            for (double tau : kTaus) {
                auto setup = qp_setup(suite_instance(i), tau, false);
                setup.stepper = mutated_stepper(setup, kind, 0.1);
                const auto ex = run_online_experiment(setup, {});
                ++runs;
                bool hit = false;
                for (const auto& c : ex.audit.checks) hit = hit || (c.asserted && !c.check.passes(kTol));
                broken += hit;
            }
        }
        d << name << ": " << broken << "/" << runs << " runs broken; ";
        ok = ok && broken > 0;
    }
    return {ok, d.str()};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ospadmm_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "config.json") << R"({"kind": "online", "qp": {"n": 5, "m": 3, "N": 400, "seed": 3},
      "solver": {"sigma": "sqrtN", "tau": 1.3}, "trajectory": true})";
    std::ostringstream log;
    CommandOptions opt;
    opt.log = &log;
    opt.seed = 42;
    const int threads = omp_get_max_threads();
    opt.out_dir = (dir / "a").string();
    const int ca = cmd_run((dir / "config.json").string(), opt);
    omp_set_num_threads(1);
    opt.out_dir = (dir / "b").string();
    const int cb = cmd_run((dir / "config.json").string(), opt);
    omp_set_num_threads(threads);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool same = true;
    for (const char* f : {"regret.csv", "report.json"}) {
        const auto a = slurp(dir / "a" / f), b = slurp(dir / "b" / f);
        same = same && !a.empty() && a == b;
    }
    return {ca == 0 && cb == 0 && same, std::string("exit codes ") + std::to_string(ca) + "," + std::to_string(cb) +
                                            (same ? ", regret.csv and report.json byte-identical" : ", outputs differ")};
}

}  // namespace

int main() {
    apply_thread_env();
    std::printf("acceptance suite, tolerance %.0e relative, %d threads\n", kTol, omp_get_max_threads());
    report(1, "per-round descent inequality, 100 QP instances x 4 tau, N=200", 60, descent_suite);
    report(2, "positive-definiteness equivalence over 1000 operator draws", 10, pd_equivalence_draws);
    report(3, "closed-form QP updates match the generic subproblem solvers", 10, closed_form_rounds);
    report(4, "regret bounds at sigma=sqrt(N), N in {100,400,1600,6400}", 300, sqrtN_regret);
    report(5, "Fejer recovery inequality, 500 offline iterations, tau in {1,1.617}", 30, fejer_recovery);
    report(6, "averaged-iterate complexity, offline QP, N=400, sigma=20", 30, averaged_complexity);
    report(7, "analytic vs converged oracle on 50 strongly convex QPs", 60, oracle_agreement);
    report(8, "mutated x, z and dual updates are caught", 60, mutation_sensitivity);
    report(9, "repeated cmd_run outputs are byte-identical", 60, determinism);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
