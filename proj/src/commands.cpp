#include "ospadmm/commands.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ospadmm {

namespace fs = std::filesystem;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void apply_thread_env() {
    if (const char* env = std::getenv("OSPADMM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
}

namespace {

using Clock = std::chrono::steady_clock;

std::ostream& out_log(const CommandOptions& o) { return o.log ? *o.log : std::cerr; }

Json num(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(num(v(i)));
    return a;
}

std::string vec_text(const Vec& v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_double(v(i));
    }
    return s + "]";
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

void write_json(const fs::path& path, const Json& doc) { write_text(path, doc.dump(2) + "\n"); }

Json check_json(const Check& c, double tol) {
    return {{"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}, {"slack", num(c.slack())}, {"pass", c.passes(tol)}};
}

Json bounds_json(const std::vector<BoundRecord>& bounds, double tol) {
    Json arr = Json::array();
    for (const auto& b : bounds) {
        Json j = {{"id", b.id}, {"evaluated", b.evaluated}, {"asserted", b.asserted}};
        if (b.evaluated) j.update(check_json(b.check, tol));
        if (!b.note.empty()) j["note"] = b.note;
        arr.push_back(j);
    }
    return arr;
}

// Per-id summary of the round checks.
Json checks_summary(const std::vector<RoundCheck>& checks, double tol) {
    std::map<std::string, Json> by_id;
    for (const auto& c : checks) {
        auto& j = by_id[c.id];
        if (j.is_null()) j = {{"rounds", 0}, {"asserted_rounds", 0}, {"failed", 0}, {"min_relative_slack", nullptr}};
        j["rounds"] = j["rounds"].get<int>() + 1;
        if (c.asserted) j["asserted_rounds"] = j["asserted_rounds"].get<int>() + 1;
        if (c.asserted && !c.check.passes(tol)) j["failed"] = j["failed"].get<int>() + 1;
        const double scale = std::max({1.0, std::abs(c.check.lhs), std::abs(c.check.rhs)});
        const double rel = c.check.slack() / scale;
        if (std::isfinite(rel) && (j["min_relative_slack"].is_null() || rel < j["min_relative_slack"].get<double>()))
            j["min_relative_slack"] = rel;
    }
    Json out = Json::object();
    for (auto& [id, j] : by_id) out[id] = j;
    return out;
}

std::string audit_csv(const std::vector<RoundCheck>& checks, double tol) {
    std::string s = "round,ineq_id,lhs,rhs,slack,pass\n";
    for (const auto& c : checks) {
        s += std::to_string(c.round) + "," + c.id + "," + format_double(c.check.lhs) + "," +
             format_double(c.check.rhs) + "," + format_double(c.check.slack()) + "," +
             (c.check.passes(tol) ? "1" : "0") + "\n";
    }
    return s;
}

std::string regret_csv(const RegretLog& log) {
    std::string s = "round,loss,residual_sq,cum_loss,cum_ctr\n";
    for (const auto& r : log.rounds) {
        s += std::to_string(r.round) + "," + format_double(r.loss) + "," + format_double(r.residual_sq) + "," +
             format_double(r.cum_loss) + "," + format_double(r.cum_ctr) + "\n";
    }
    return s;
}

const BoundRecord* find_bound(const std::vector<BoundRecord>& bounds, const std::string& id) {
    for (const auto& b : bounds)
        if (b.id == id && b.evaluated) return &b;
    return nullptr;
}

Json assumptions_json(const AssumptionCertificate& c) {
    return {{"gamma0", num(c.gamma0)},
            {"gamma0_next", num(c.gamma0_next)},
            {"L_sq", num(c.L_sq)},
            {"assumption_S_lower_bound", c.s_lower_bound},
            {"S_monotone", c.monotone},
            {"lambda_min_S", num(c.lambda_min_S)},
            {"worst_monotone_gap", num(c.worst_monotone_gap)}};
}

Json tau_json(double tau) {
    const auto tc = tau_constants(tau);
    return {{"tau", tc.tau}, {"m", tc.m}, {"s", tc.s}, {"t", tc.t}, {"eta", tc.eta}};
}

Json oracle_json(const OfflineOptimum& o) {
    return {{"method", method_name(o.method)},
            {"value", num(o.value)},
            {"x", vec_json(o.x)},
            {"z", vec_json(o.z)},
            {"kkt_max_residual", num(o.kkt.max_residual())},
            {"iterations", o.iterations}};
}

const Json kNotes = Json::array({"M̂ uses Ē = [A B] for its E*E term",
                                 "κ₃ and the bound constants use the 𝒯-seminorm of z¹ - z⁰ (z⁰ := z¹)",
                                 "γ₀ is computed over iterates 1..N (asserted) and 2..N+1 (reported)",
                                 "M̄ carries σ·s_τ·Ē*Ē"});

RegretLog offline_log(const OfflineProblem& problem, const Trajectory& traj, std::size_t N) {
    RegretLog log;
    double cl = 0.0, cc = 0.0;
    for (std::size_t k = 1; k <= N; ++k) {
        const auto& w = traj.at(k);
        RoundRecord r;
        r.round = k;
        r.loss = problem.value(w.x, w.z);
        r.residual_sq = problem.cc.residual_vector(w.x, w.z).squaredNorm();
        cl += r.loss;
        cc += r.residual_sq;
        r.cum_loss = cl;
        r.cum_ctr = cc;
        r.subgrad_sq = problem.f->subgradient(w.x).squaredNorm();
        log.rounds.push_back(r);
    }
    return log;
}

// Rebuilds the online log from iterates so cmd_audit needs nothing beyond the trajectory file.
RegretLog online_log(const OnlineSetup& setup, const Trajectory& traj, std::size_t N) {
    RegretLog log;
    double cl = 0.0, cc = 0.0;
    for (std::size_t k = 1; k <= N; ++k) {
        const auto& w = traj.at(k);
        const auto f = setup.stream.cost(k);
        RoundRecord r;
        r.round = k;
        const double gz = setup.g->value(w.z);
        r.loss = gz == kInfinity ? kInfinity : f->value(w.x) + gz;
        r.residual_sq = setup.cc.residual_vector(w.x, w.z).squaredNorm();
        cl += r.loss;
        cc += r.residual_sq;
        r.cum_loss = cl;
        r.cum_ctr = cc;
        r.subgrad_sq = f->subgradient(w.x).squaredNorm();
        log.rounds.push_back(r);
    }
    return log;
}

struct OnlineOutcome {
    Json report;
    std::string regret;
    std::string audit;
    std::string plot;
    std::vector<std::string> failures;
};

OnlineOutcome summarize_online(const ExperimentConfig& cfg, const OnlineSetup& setup, const RegretLog& log,
                               const OnlineAudit& a, double tol) {
    OnlineOutcome o;
    o.failures = a.failures(tol);
    const std::size_t N = setup.stream.horizon();
    const double sN = std::sqrt(static_cast<double>(N));
    Json r;
    r["config"] = cfg.echo;
    r["kind"] = "online";
    r["N"] = N;
    r["sigma"] = setup.config.sigma;
    r["tau_constants"] = tau_json(setup.config.tau);
    r["stepper"] = setup.stepper ? "closed_form" : "generic";
    if (a.error.empty() || a.optimum.x.size() > 0) r["oracle"] = oracle_json(a.optimum);
    r["regret_obj"] = num(a.regret_obj);
    r["regret_ctr"] = num(a.regret_ctr);
    r["regret_obj_over_N"] = num(a.regret_obj / static_cast<double>(N));
    r["regret_ctr_over_N"] = num(a.regret_ctr / static_cast<double>(N));
    r["regret_obj_over_sqrtN"] = num(a.regret_obj / sN);
    r["regret_ctr_over_sqrtN"] = num(a.regret_ctr / sN);
    r["consistent_start_residual"] = num(a.consistent_start);
    r["round1_asserted"] = a.round1_asserted;
    r["sigma_operators_zero"] = a.sigma_zero;
    r["pd_equivalence_round1"] = a.pd_equivalence_round1;
    r["assumptions"] = assumptions_json(a.cert);
    r["checks"] = checks_summary(a.checks, tol);
    r["bounds"] = bounds_json(a.bounds, tol);
    r["notes"] = kNotes;
    r["tolerance"] = tol;
    r["error"] = a.error;
    r["failures"] = o.failures;
    r["passed"] = o.failures.empty();
    o.report = r;
    o.regret = regret_csv(log);
    o.audit = audit_csv(a.checks, tol);

    const BoundRecord* cor = find_bound(a.bounds, "objective_regret_sqrtN");
    const double bound_col = cor ? cor->check.rhs * static_cast<double>(N) / sN : std::nan("");
    std::string plot = "round,regret_obj,regret_ctr,regret_obj/sqrt_round,regret_ctr/sqrt_round,bound_obj/sqrtN\n";
    const double nu = a.optimum.value;
    for (const auto& rr : log.rounds) {
        const double t = static_cast<double>(rr.round);
        const double ro = rr.cum_loss - t * nu;
        plot += std::to_string(rr.round) + "," + format_double(ro) + "," + format_double(rr.cum_ctr) + "," +
                format_double(ro / std::sqrt(t)) + "," + format_double(rr.cum_ctr / std::sqrt(t)) + "," +
                format_double(bound_col) + "\n";
    }
    o.plot = plot;
    return o;
}

OnlineOutcome summarize_offline(const ExperimentConfig& cfg, const OfflineSetup& setup, const RegretLog& log,
                                const OfflineAudit& a, double tol) {
    OnlineOutcome o;
    o.failures = a.failures(tol);
    const std::size_t N = setup.iterations;
    const double nu = a.optimum.value;
    Json r;
    r["config"] = cfg.echo;
    r["kind"] = "offline";
    r["N"] = N;
    r["sigma"] = setup.config.sigma;
    r["tau_constants"] = tau_json(setup.config.tau);
    if (a.optimum.x.size() > 0) {
        r["oracle"] = oracle_json(a.optimum);
        r["kkt_y"] = vec_json(a.optimum.kkt.y);
    }
    double obj = 0.0;
    for (const auto& rr : log.rounds) obj += rr.loss - nu;
    r["regret_obj"] = num(obj);
    r["regret_ctr"] = num(log.rounds.empty() ? 0.0 : log.rounds.back().cum_ctr);
    r["consistent_start_residual"] = num(a.consistent_start);
    r["round1_asserted"] = a.round1_asserted;
    r["sigma_operators_zero"] = a.sigma_zero;
    r["fejer_potential_monotone"] = a.potentials_monotone;
    r["checks"] = checks_summary(a.checks, tol);
    r["bounds"] = bounds_json(a.bounds, tol);
    r["notes"] = kNotes;
    r["tolerance"] = tol;
    r["error"] = a.error;
    r["failures"] = o.failures;
    r["passed"] = o.failures.empty();
    o.report = r;
    o.regret = regret_csv(log);
    o.audit = audit_csv(a.checks, tol);
    std::string plot = "round,fejer_potential,objective_gap,residual_sq\n";
    for (std::size_t k = 1; k <= log.rounds.size(); ++k) {
        const auto& rr = log.rounds[k - 1];
        const double pot = k - 1 < a.potentials.size() ? a.potentials[k - 1] : std::nan("");
        plot += std::to_string(k) + "," + format_double(pot) + "," + format_double(rr.loss - nu) + "," +
                format_double(rr.residual_sq) + "\n";
    }
    o.plot = plot;
    return o;
}

void emit(const fs::path& dir, const OnlineOutcome& o) {
    write_text(dir / "regret.csv", o.regret);
    write_json(dir / "report.json", o.report);
    write_text(dir / "audit.csv", o.audit);
    write_text(dir / "plot.csv", o.plot);
}

int report_failures(const CommandOptions& opt, const std::vector<std::string>& failures, const std::string& error) {
    if (failures.empty()) return 0;
    auto& log = out_log(opt);
    if (!error.empty()) log << "error: " << error << "\n";
    log << "audit failed (" << failures.size() << "):";
    const std::size_t shown = std::min<std::size_t>(failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) log << " " << failures[i];
    if (shown < failures.size()) log << " ...";
    log << "\n";
    return 1;
}

std::vector<double> column(const RegretLog& log, bool loss) {
    std::vector<double> v;
    for (const auto& r : log.rounds) v.push_back(loss ? r.loss : r.residual_sq);
    return v;
}

fs::path prepare_dir(const CommandOptions& opt) {
    fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

int run_loaded(const ExperimentConfig& cfg, const CommandOptions& opt) {
    const fs::path dir = prepare_dir(opt);
    const auto t0 = Clock::now();
    AuditOptions ao;
    ao.tol = opt.tol;
    OnlineOutcome o;
    std::string error;
    std::size_t N = 0;
    if (cfg.source == ProblemSource::OfflineQp) {
        const OfflineSetup setup = build_offline(cfg);
        N = setup.iterations;
        const auto ex = run_offline_experiment(setup, ao);
        const auto log = offline_log(setup.problem, ex.trajectory, ex.trajectory.size() > N ? N : 0);
        o = summarize_offline(cfg, setup, log, ex.audit, opt.tol);
        error = ex.audit.error;
        if (cfg.write_trajectory && ex.trajectory.size() == N + 1)
            write_trajectory((dir / "trajectory.jsonl").string(), cfg.echo, "offline", ex.trajectory,
                             column(log, true), column(log, false));
    } else {
        const OnlineSetup setup = build_online(cfg);
        N = setup.stream.horizon();
        const auto ex = run_online_experiment(setup, ao);
        o = summarize_online(cfg, setup, ex.run.log, ex.audit, opt.tol);
        error = ex.audit.error;
        if (cfg.write_trajectory && ex.run.trajectory.size() == N + 1)
            write_trajectory((dir / "trajectory.jsonl").string(), cfg.echo, "online", ex.run.trajectory,
                             column(ex.run.log, true), column(ex.run.log, false));
    }
    emit(dir, o);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    write_json(dir / "timing.json", Json{{"wall_seconds", secs}, {"N", N}});
    return report_failures(opt, o.failures, error);
}

template <class F>
int guarded(const CommandOptions& opt, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        out_log(opt) << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out_log(opt) << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

void write_trajectory(const std::string& path, const Json& config, const std::string& kind, const Trajectory& traj,
                      const std::vector<double>& loss, const std::vector<double>& residual_sq) {
    std::string s = Json{{"format", "ospadmm-trajectory"}, {"version", 1}, {"kind", kind}, {"config", config},
                         {"iterates", traj.size()}}
                        .dump() +
                    "\n";
    for (std::size_t k = 1; k <= traj.size(); ++k) {
        const auto& w = traj.at(k);
        s += "{\"k\":" + std::to_string(k) + ",\"x\":" + vec_text(w.x) + ",\"z\":" + vec_text(w.z) +
             ",\"y\":" + vec_text(w.y);
        if (k <= loss.size()) {
            const double l = loss[k - 1];
            s += ",\"loss\":" + (std::isfinite(l) ? format_double(l) : "\"" + format_double(l) + "\"");
            s += ",\"residual_sq\":" + format_double(residual_sq[k - 1]);
        }
        s += "}\n";
    }
    write_text(path, s);
}

TrajectoryFile read_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trajectory " + path);
    TrajectoryFile tf;
    std::string line;
    std::size_t lineno = 0;
    auto corrupt = [&](const std::string& why) -> ConfigError {
        return ConfigError("corrupt trajectory " + path + " (line " + std::to_string(lineno) + "): " + why);
    };
    auto to_vec = [&](const Json& a, const char* what) {
        if (!a.is_array()) throw corrupt(std::string(what) + " is not an array");
        Vec v(static_cast<Eigen::Index>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_number()) throw corrupt(std::string(what) + " has a non-numeric entry");
            v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
        }
        return v;
    };
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::exception& e) {
            throw corrupt(e.what());
        }
        if (lineno == 1) {
            if (j.value("format", "") != "ospadmm-trajectory" || !j.contains("config") || !j.contains("iterates"))
                throw corrupt("missing trajectory header");
            tf.config = j.at("config");
            tf.kind = j.value("kind", "");
            if (tf.kind != "online" && tf.kind != "offline") throw corrupt("unknown kind");
            expected = j.at("iterates").get<std::size_t>();
            continue;
        }
        const std::size_t k = tf.trajectory.size() + 1;
        if (!j.contains("k") || j.at("k") != k) throw corrupt("iterate index out of sequence");
        if (!j.contains("x") || !j.contains("z") || !j.contains("y")) throw corrupt("iterate lacks x, z or y");
        Iterate w{to_vec(j.at("x"), "x"), to_vec(j.at("z"), "z"), to_vec(j.at("y"), "y")};
        if (k > 1) {
            const auto& first = tf.trajectory.at(1);
            if (w.x.size() != first.x.size() || w.z.size() != first.z.size() || w.y.size() != first.y.size())
                throw corrupt("iterate dimensions change");
        }
        tf.trajectory.iterates.push_back(std::move(w));
        if (j.contains("loss")) {
            const auto& l = j.at("loss");
            double lv;
            if (l.is_number()) lv = l.get<double>();
            else if (l == "inf") lv = kInfinity;
            else throw corrupt("bad loss value");
            if (!j.contains("residual_sq") || !j.at("residual_sq").is_number()) throw corrupt("bad residual_sq");
            tf.loss.push_back(lv);
            tf.residual_sq.push_back(j.at("residual_sq").get<double>());
        }
    }
    if (lineno == 0) throw ConfigError("corrupt trajectory " + path + ": empty file");
    if (tf.trajectory.size() == 0) throw ConfigError("corrupt trajectory " + path + ": no iterates");
    if (tf.trajectory.size() != expected)
        throw ConfigError("corrupt trajectory " + path + ": header announces " + std::to_string(expected) +
                          " iterates, found " + std::to_string(tf.trajectory.size()));
    return tf;
}

int cmd_run(const std::string& config_path, const CommandOptions& opt) {
    return guarded(opt, [&] {
        const auto cfg = load_config(config_path, opt.seed);
        if (cfg.kind == RunKind::Sweep) throw ConfigError("config kind is sweep; use the sweep command");
        return run_loaded(cfg, opt);
    });
}

int cmd_sweep(const std::string& config_path, const CommandOptions& opt) {
    return guarded(opt, [&] {
        const auto cfg = load_config(config_path, opt.seed);
        if (cfg.kind != RunKind::Sweep) throw ConfigError("config kind is not sweep");
        const fs::path dir = prepare_dir(opt);
        const auto t0 = Clock::now();
        std::vector<ExperimentConfig> points;
        for (double v : cfg.sweep.values)
            for (std::size_t rep = 0; rep < cfg.sweep.replications; ++rep) points.push_back(sweep_point(cfg, v, rep));
        const bool offline = cfg.source == ProblemSource::OfflineQp;
        std::vector<std::string> rows(points.size());
        std::vector<std::vector<std::string>> fails(points.size());
        std::vector<std::string> errors(points.size());
        AuditOptions ao;
        ao.tol = opt.tol;
        ao.parallel = false;
        const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto& pc = points[i];
            const std::size_t rep = static_cast<std::size_t>(i) % cfg.sweep.replications;
            std::string row;
            try {
                if (offline) {
                    const auto setup = build_offline(pc);
                    const auto ex = run_offline_experiment(setup, ao);
                    const std::size_t N = setup.iterations;
                    const auto log = offline_log(setup.problem, ex.trajectory, ex.trajectory.size() > N ? N : 0);
                    double obj = 0.0;
                    for (const auto& r : log.rounds) obj += r.loss - ex.audit.optimum.value;
                    const double ctr = log.rounds.empty() ? 0.0 : log.rounds.back().cum_ctr;
                    const double sN = std::sqrt(static_cast<double>(N));
                    const auto* gap = find_bound(ex.audit.bounds, "averaged_objective_gap");
                    const auto* vio = find_bound(ex.audit.bounds, "averaged_constraint_violation");
                    const double nan = std::nan("");
                    row = std::to_string(N) + "," + format_double(setup.config.sigma) + "," +
                          format_double(setup.config.tau) + "," + std::to_string(rep) + "," + format_double(obj) + "," +
                          format_double(ctr) + "," + format_double(obj / sN) + "," + format_double(ctr / sN) + "," +
                          format_double(gap ? gap->check.lhs : nan) + "," + format_double(vio ? vio->check.lhs : nan) +
                          "," + format_double(gap ? gap->check.rhs : nan) + "," +
                          format_double(vio ? vio->check.rhs : nan);
                    fails[i] = ex.audit.failures(opt.tol);
                    errors[i] = ex.audit.error;
                } else {
                    const auto setup = build_online(pc);
                    const auto ex = run_online_experiment(setup, ao);
                    const std::size_t N = setup.stream.horizon();
                    const double sN = std::sqrt(static_cast<double>(N));
                    const auto& a = ex.audit;
                    auto scaled = [&](const char* id) {
                        const auto* b = find_bound(a.bounds, id);
                        return format_double(b ? b->check.rhs * static_cast<double>(N) / sN : std::nan(""));
                    };
                    row = std::to_string(N) + "," + format_double(setup.config.sigma) + "," +
                          format_double(setup.config.tau) + "," + std::to_string(rep) + "," +
                          format_double(a.regret_obj) + "," + format_double(a.regret_ctr) + "," +
                          format_double(a.regret_obj / sN) + "," + format_double(a.regret_ctr / sN) + "," +
                          scaled("objective_regret_bound") + "," + scaled("constraint_regret_bound") + "," +
                          scaled("objective_regret_sqrtN") + "," + scaled("constraint_regret_sqrtN");
                    fails[i] = a.failures(opt.tol);
                    errors[i] = a.error;
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
                fails[i] = {"error"};
                row = "nan,nan,nan," + std::to_string(rep) + ",nan,nan,nan,nan,nan,nan,nan,nan";
            }
            rows[i] = row + "," + (fails[i].empty() ? "1" : "0");
        }
        std::string csv = offline ? "N,sigma,tau,rep,regret_obj,regret_ctr,regret_obj/sqrtN,regret_ctr/sqrtN,"
                                    "averaged_gap,averaged_ctr,averaged_gap_rhs,averaged_ctr_rhs,passed\n"
                                  : "N,sigma,tau,rep,regret_obj,regret_ctr,regret_obj/sqrtN,regret_ctr/sqrtN,"
                                    "obj_bound/sqrtN,ctr_bound/sqrtN,obj_bound_sqrtN_form/sqrtN,"
                                    "ctr_bound_sqrtN_form/sqrtN,passed\n";
        for (const auto& r : rows) csv += r + "\n";
        write_text(dir / "sweep.csv", csv);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        write_json(dir / "timing.json", Json{{"wall_seconds", secs}, {"points", points.size()}});
        std::vector<std::string> all;
        std::string first_error;
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (const auto& f : fails[i]) all.push_back("point" + std::to_string(i) + ":" + f);
            if (first_error.empty()) first_error = errors[i];
        }
        return report_failures(opt, all, first_error);
    });
}

int cmd_audit(const std::string& trajectory_path, const CommandOptions& opt) {
    return guarded(opt, [&] {
        const TrajectoryFile tf = read_trajectory(trajectory_path);
        const auto cfg = parse_config(tf.config);
        const fs::path dir = prepare_dir(opt);
        AuditOptions ao;
        ao.tol = opt.tol;
        const std::size_t N = cfg.horizon();
        if (tf.trajectory.size() != N + 1)
            throw ConfigError("corrupt trajectory: expected " + std::to_string(N + 1) + " iterates");
        OnlineOutcome o;
        std::string error;
        RegretLog log;
        if (tf.kind == "offline") {
            if (cfg.source != ProblemSource::OfflineQp) throw ConfigError("corrupt trajectory: kind/config mismatch");
            const OfflineSetup setup = build_offline(cfg);
            const auto a = audit_offline_trajectory(setup, tf.trajectory, ao);
            log = offline_log(setup.problem, tf.trajectory, N);
            o = summarize_offline(cfg, setup, log, a, opt.tol);
            error = a.error;
        } else {
            if (cfg.source == ProblemSource::OfflineQp) throw ConfigError("corrupt trajectory: kind/config mismatch");
            const OnlineSetup setup = build_online(cfg);
            log = online_log(setup, tf.trajectory, N);
            const auto a = audit_online_trajectory(setup, tf.trajectory, log, ao);
            o = summarize_online(cfg, setup, log, a, opt.tol);
            error = a.error;
        }
        // Recorded per-round values must match what the iterates imply.
        if (tf.loss.size() != N) {
            o.failures.push_back("records:count");
        } else {
            for (std::size_t k = 1; k <= N; ++k) {
                const auto& r = log.rounds[k - 1];
                if (r.loss != tf.loss[k - 1] || r.residual_sq != tf.residual_sq[k - 1])
                    o.failures.push_back(std::to_string(k) + ":record");
            }
        }
        o.report["failures"] = o.failures;
        o.report["passed"] = o.failures.empty();
        write_json(dir / "audit_report.json", o.report);
        write_text(dir / "audit.csv", o.audit);
        return report_failures(opt, o.failures, error);
    });
}

}  // namespace ospadmm
