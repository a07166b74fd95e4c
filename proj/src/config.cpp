#include "ospadmm/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ospadmm {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) fail(where + ": expected an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) fail(where + ": unknown key \"" + key + "\"");
}

double get_number(const Json& obj, const std::string& key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(where + "." + key + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(where + "." + key + ": not finite");
    return d;
}

std::uint64_t get_uint(const Json& obj, const std::string& key, std::uint64_t fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        fail(where + "." + key + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const Json& obj, const std::string& key, bool fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) fail(where + "." + key + ": expected true or false");
    return obj.at(key).get<bool>();
}

Vec parse_vec(const Json& v, const std::string& where) {
    if (!v.is_array()) fail(where + ": expected an array of numbers");
    Vec out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) fail(where + ": expected an array of numbers");
        out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
    }
    require_finite(out, where);
    return out;
}

Mat parse_mat(const Json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) fail(where + ": expected a non-empty array of rows");
    const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
    Mat out(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array() || v[i].size() != cols) fail(where + ": rows must be arrays of equal length");
        out.row(static_cast<Eigen::Index>(i)) = parse_vec(v[i], where).transpose();
    }
    return out;
}

Json mat_json(const Mat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

// Scalar s means s·I; otherwise an explicit symmetric matrix.
Mat parse_operator(const Json& v, Eigen::Index n, const std::string& where) {
    if (v.is_number()) {
        const double s = v.get<double>();
        if (!(s >= 0.0) || !std::isfinite(s)) fail(where + ": scalar must be finite and non-negative");
        return s * Mat::Identity(n, n);
    }
    Mat m = parse_mat(v, where);
    if (m.rows() != n || m.cols() != n)
        fail(where + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    try {
        PsdOperator check(m);
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
    return m;
}

QuadraticCost::SigmaKind parse_sigma_kind(const Json& obj, const std::string& where) {
    if (!obj.contains("sigma_op")) return QuadraticCost::SigmaKind::Zero;
    const auto& v = obj.at("sigma_op");
    if (v == "zero") return QuadraticCost::SigmaKind::Zero;
    if (v == "hessian") return QuadraticCost::SigmaKind::Hessian;
    fail(where + ".sigma_op: expected \"zero\" or \"hessian\"");
}

std::string sigma_kind_name(QuadraticCost::SigmaKind k) {
    return k == QuadraticCost::SigmaKind::Zero ? "zero" : "hessian";
}

SimpleSet parse_set(const Json& spec, Eigen::Index n, const std::string& where) {
    if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
        fail(where + ": expected {\"kind\": ...}");
    const std::string kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "box") {
            check_keys(spec, {"kind", "lo", "hi"}, where);
            auto bound = [&](const char* key, double fallback) -> Vec {
                if (!spec.contains(key)) return Vec::Constant(n, fallback);
                if (spec.at(key).is_number()) return Vec::Constant(n, spec.at(key).get<double>());
                Vec v = parse_vec(spec.at(key), where + "." + key);
                if (v.size() != n) fail(where + "." + key + ": dimension " + std::to_string(n) + " expected");
                return v;
            };
            return SimpleSet::box(bound("lo", -1.0), bound("hi", 1.0));
        }
        if (kind == "ball") {
            check_keys(spec, {"kind", "center", "radius"}, where);
            Vec center = spec.contains("center") ? parse_vec(spec.at("center"), where + ".center") : Vec::Zero(n);
            if (center.size() != n) fail(where + ".center: dimension " + std::to_string(n) + " expected");
            return SimpleSet::ball(center, get_number(spec, "radius", 1.0, where));
        }
        if (kind == "simplex") {
            check_keys(spec, {"kind"}, where);
            return SimpleSet::simplex(n);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ".kind: expected box, ball or simplex");
}

Json set_json(const SimpleSet& s) {
    switch (s.kind) {
        case SimpleSet::Kind::Box: return {{"kind", "box"}, {"lo", vec_json(s.lo)}, {"hi", vec_json(s.hi)}};
        case SimpleSet::Kind::Ball: return {{"kind", "ball"}, {"center", vec_json(s.center)}, {"radius", s.radius}};
        case SimpleSet::Kind::Simplex: return {{"kind", "simplex"}};
    }
    return {};
}

std::string kind_name(RunKind k) {
    switch (k) {
        case RunKind::Online: return "online";
        case RunKind::Offline: return "offline";
        case RunKind::Sweep: return "sweep";
    }
    return "online";
}

Json sigma_json(const SolverSpec& s) { return s.sigma_sqrtN ? Json("sqrtN") : Json(s.sigma); }

Json to_json(const ExperimentConfig& c) {
    Json doc;
    doc["kind"] = kind_name(c.kind);
    switch (c.source) {
        case ProblemSource::Qp: {
            const auto& q = c.qp;
            doc["qp"] = {{"n", q.n},
                         {"m", q.m},
                         {"N", q.N},
                         {"seed", q.seed},
                         {"G_scale", q.G_scale},
                         {"c_scale", q.c_scale},
                         {"X", set_json(q.X)},
                         {"fixed_G", q.fixed_G},
                         {"sigma_op", sigma_kind_name(q.sigma_op)},
                         {"stepper", c.closed_form ? "closed_form" : "generic"}};
            break;
        }
        case ProblemSource::General: {
            const auto& g = c.general;
            Json p = {{"A", mat_json(g.A)}, {"B", mat_json(g.B)}, {"c", vec_json(g.c)}, {"g", g.g}};
            p["stream"] = {{"kind", g.stream.kind},         {"N", g.stream.N},
                           {"seed", g.stream.seed},         {"G_scale", g.stream.G_scale},
                           {"c_scale", g.stream.c_scale},   {"fixed_G", g.stream.fixed_G},
                           {"sigma_op", sigma_kind_name(g.stream.sigma_op)}};
            if (g.x1 || g.z1 || g.y1) {
                Json init;
                if (g.x1) init["x"] = vec_json(*g.x1);
                if (g.z1) init["z"] = vec_json(*g.z1);
                if (g.y1) init["y"] = vec_json(*g.y1);
                p["init"] = init;
            }
            doc["problem"] = p;
            break;
        }
        case ProblemSource::OfflineQp: {
            const auto& o = c.offline;
            doc["offline_qp"] = {{"n", o.n},
                                 {"p", o.p},
                                 {"m", o.m},
                                 {"seed", o.seed},
                                 {"quadratic_g", o.quadratic_g},
                                 {"S_scale", o.S_scale},
                                 {"T_scale", o.T_scale},
                                 {"sigma_op", sigma_kind_name(o.sigma_op)},
                                 {"iterations", c.iterations}};
            break;
        }
    }
    Json solver = {{"sigma", sigma_json(c.solver)}, {"tau", c.solver.tau}};
    if (c.solver.T) solver["T"] = mat_json(*c.solver.T);
    if (c.solver.S) solver["S"] = mat_json(*c.solver.S);
    doc["solver"] = solver;
    if (c.kind == RunKind::Sweep) {
        doc["sweep"] = {{"variable", c.sweep.variable},
                        {"values", c.sweep.values},
                        {"replications", c.sweep.replications}};
    }
    doc["trajectory"] = c.write_trajectory;
    return doc;
}

}  // namespace

double SolverSpec::resolve_sigma(std::size_t N) const {
    return sigma_sqrtN ? default_sigma(N) : sigma;
}

std::size_t ExperimentConfig::horizon() const {
    switch (source) {
        case ProblemSource::Qp: return qp.N;
        case ProblemSource::General: return general.stream.N;
        case ProblemSource::OfflineQp: return iterations;
    }
    return 0;
}

RegularizerPtr make_regularizer(const Json& spec, Eigen::Index n) {
    const std::string where = "problem.g";
    if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
        fail(where + ": expected {\"kind\": ...}");
    const std::string kind = spec.at("kind").get<std::string>();
    try {
        if (kind == "zero") {
            check_keys(spec, {"kind"}, where);
            return std::make_shared<ZeroRegularizer>(n);
        }
        if (kind == "quadratic") {
            check_keys(spec, {"kind", "Q", "q"}, where);
            const Mat Q = spec.contains("Q") ? parse_mat(spec.at("Q"), where + ".Q") : Mat::Zero(n, n);
            const Vec q = spec.contains("q") ? parse_vec(spec.at("q"), where + ".q") : Vec::Zero(n);
            if (Q.rows() != n || Q.cols() != n || q.size() != n) fail(where + ": Q/q dimensions differ from B columns");
            return std::make_shared<QuadraticRegularizer>(Q, q);
        }
        if (kind == "indicator_affine") {
            check_keys(spec, {"kind", "C", "d"}, where);
            if (!spec.contains("C") || !spec.contains("d")) fail(where + ": indicator_affine needs C and d");
            const Mat C = parse_mat(spec.at("C"), where + ".C");
            const Vec d = parse_vec(spec.at("d"), where + ".d");
            if (C.cols() != n || C.rows() != d.size()) fail(where + ": C/d dimensions inconsistent");
            return std::make_shared<AffineIndicator>(C, d);
        }
        if (kind == "l1") {
            check_keys(spec, {"kind", "weight"}, where);
            return std::make_shared<L1Regularizer>(n, get_number(spec, "weight", 1.0, where));
        }
        if (kind == "box" || kind == "ball" || kind == "simplex")
            return std::make_shared<SetIndicator>(parse_set(spec, n, where));
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ".kind: unknown regularizer \"" + kind + "\"");
}

ExperimentConfig parse_config(const Json& doc, std::optional<std::uint64_t> seed) {
    check_keys(doc, {"kind", "qp", "problem", "offline_qp", "solver", "sweep", "trajectory"}, "config");
    ExperimentConfig c;
    const std::string kind = doc.value("kind", std::string("online"));
    if (kind == "online") c.kind = RunKind::Online;
    else if (kind == "offline") c.kind = RunKind::Offline;
    else if (kind == "sweep") c.kind = RunKind::Sweep;
    else fail("config.kind: expected online, offline or sweep");

    const int sources = doc.contains("qp") + doc.contains("problem") + doc.contains("offline_qp");
    if (sources != 1) fail("config: exactly one of \"qp\", \"problem\", \"offline_qp\" is required");

    if (doc.contains("qp")) {
        const auto& q = doc.at("qp");
        const std::string w = "qp";
        check_keys(q, {"n", "m", "N", "seed", "G_scale", "c_scale", "X", "fixed_G", "sigma_op", "stepper"}, w);
        c.source = ProblemSource::Qp;
        c.qp.n = static_cast<Eigen::Index>(get_uint(q, "n", 5, w));
        c.qp.m = static_cast<Eigen::Index>(get_uint(q, "m", 3, w));
        c.qp.N = get_uint(q, "N", 100, w);
        c.qp.seed = seed.value_or(get_uint(q, "seed", 0, w));
        c.qp.G_scale = get_number(q, "G_scale", 0.5, w);
        c.qp.c_scale = get_number(q, "c_scale", 1.0, w);
        if (c.qp.n < 1) fail("qp.n: must be at least 1");
        c.qp.X = q.contains("X") ? parse_set(q.at("X"), c.qp.n, "qp.X") : SimpleSet::box(c.qp.n, -1.0, 1.0);
        c.qp.fixed_G = get_bool(q, "fixed_G", false, w);
        c.qp.sigma_op = parse_sigma_kind(q, w);
        const std::string stepper = q.value("stepper", std::string("closed_form"));
        if (stepper != "closed_form" && stepper != "generic") fail("qp.stepper: expected closed_form or generic");
        c.closed_form = stepper == "closed_form";
        if (c.kind == RunKind::Offline) fail("config.kind: offline runs need \"offline_qp\"");
    } else if (doc.contains("problem")) {
        const auto& p = doc.at("problem");
        check_keys(p, {"A", "B", "c", "g", "stream", "init"}, "problem");
        c.source = ProblemSource::General;
        auto& g = c.general;
        for (const char* key : {"A", "B", "c", "g", "stream"})
            if (!p.contains(key)) fail(std::string("problem: missing \"") + key + "\"");
        g.A = parse_mat(p.at("A"), "problem.A");
        g.B = parse_mat(p.at("B"), "problem.B");
        g.c = parse_vec(p.at("c"), "problem.c");
        if (g.A.rows() != g.c.size() || g.B.rows() != g.c.size())
            fail("problem: A, B and c must share the output dimension");
        make_regularizer(p.at("g"), g.B.cols());
        g.g = p.at("g");
        const auto& s = p.at("stream");
        check_keys(s, {"kind", "N", "seed", "G_scale", "c_scale", "fixed_G", "sigma_op"}, "problem.stream");
        g.stream.kind = s.value("kind", std::string("quadratic"));
        if (g.stream.kind != "quadratic" && g.stream.kind != "linear")
            fail("problem.stream.kind: expected quadratic or linear");
        g.stream.N = get_uint(s, "N", 100, "problem.stream");
        g.stream.seed = seed.value_or(get_uint(s, "seed", 0, "problem.stream"));
        g.stream.G_scale = get_number(s, "G_scale", 1.0, "problem.stream");
        g.stream.c_scale = get_number(s, "c_scale", 1.0, "problem.stream");
        g.stream.fixed_G = get_bool(s, "fixed_G", false, "problem.stream");
        g.stream.sigma_op = parse_sigma_kind(s, "problem.stream");
        if (p.contains("init")) {
            const auto& init = p.at("init");
            check_keys(init, {"x", "z", "y"}, "problem.init");
            if (init.contains("x")) g.x1 = parse_vec(init.at("x"), "problem.init.x");
            if (init.contains("z")) g.z1 = parse_vec(init.at("z"), "problem.init.z");
            if (init.contains("y")) g.y1 = parse_vec(init.at("y"), "problem.init.y");
            if ((g.x1 && g.x1->size() != g.A.cols()) || (g.z1 && g.z1->size() != g.B.cols()) ||
                (g.y1 && g.y1->size() != g.c.size()))
                fail("problem.init: dimensions differ from A, B, c");
        }
        if (c.kind == RunKind::Offline) fail("config.kind: offline runs need \"offline_qp\"");
    } else {
        const auto& o = doc.at("offline_qp");
        const std::string w = "offline_qp";
        check_keys(o, {"n", "p", "m", "seed", "quadratic_g", "S_scale", "T_scale", "sigma_op", "iterations"}, w);
        c.source = ProblemSource::OfflineQp;
        c.offline.n = static_cast<Eigen::Index>(get_uint(o, "n", 4, w));
        c.offline.p = static_cast<Eigen::Index>(get_uint(o, "p", 2, w));
        c.offline.m = static_cast<Eigen::Index>(get_uint(o, "m", 3, w));
        c.offline.seed = seed.value_or(get_uint(o, "seed", 0, w));
        c.offline.quadratic_g = get_bool(o, "quadratic_g", false, w);
        c.offline.S_scale = get_number(o, "S_scale", 0.1, w);
        c.offline.T_scale = get_number(o, "T_scale", 0.1, w);
        c.offline.sigma_op = parse_sigma_kind(o, w);
        c.iterations = get_uint(o, "iterations", 400, w);
        if (c.kind == RunKind::Online) c.kind = RunKind::Offline;
    }
    if (c.horizon() < 1) fail("config: horizon (N or iterations) must be at least 1");

    const Json solver = doc.value("solver", Json::object());
    check_keys(solver, {"sigma", "tau", "T", "S"}, "solver");
    if (solver.contains("sigma")) {
        const auto& s = solver.at("sigma");
        if (s == "sqrtN") {
            c.solver.sigma_sqrtN = true;
        } else if (s.is_number() && s.get<double>() > 0.0 && std::isfinite(s.get<double>())) {
            c.solver.sigma_sqrtN = false;
            c.solver.sigma = s.get<double>();
        } else {
            fail("solver.sigma: expected \"sqrtN\" or a positive number");
        }
    }
    c.solver.tau = get_number(solver, "tau", 1.0, "solver");
    try {
        validate_tau(c.solver.tau);
    } catch (const Error& e) {
        fail(e.what());
    }
    const Eigen::Index z_dim = c.source == ProblemSource::Qp          ? c.qp.n
                               : c.source == ProblemSource::General ? c.general.B.cols()
                                                                    : c.offline.p;
    const Eigen::Index x_dim = c.source == ProblemSource::Qp          ? c.qp.n
                               : c.source == ProblemSource::General ? c.general.A.cols()
                                                                    : c.offline.n;
    if (solver.contains("T")) {
        if (c.source == ProblemSource::OfflineQp) fail("solver.T: offline_qp sets 𝒯 through T_scale");
        c.solver.T = parse_operator(solver.at("T"), z_dim, "solver.T");
    }
    if (solver.contains("S")) {
        if (c.source != ProblemSource::General) fail("solver.S: only general problems take an explicit S");
        c.solver.S = parse_operator(solver.at("S"), x_dim, "solver.S");
    }

    if (c.kind == RunKind::Sweep) {
        if (!doc.contains("sweep")) fail("config: sweep runs need a \"sweep\" block");
        const auto& s = doc.at("sweep");
        check_keys(s, {"variable", "values", "replications"}, "sweep");
        c.sweep.variable = s.value("variable", std::string("N"));
        if (c.sweep.variable != "N" && c.sweep.variable != "sigma" && c.sweep.variable != "tau")
            fail("sweep.variable: expected N, sigma or tau");
        if (!s.contains("values")) fail("sweep.values: missing");
        const Vec v = parse_vec(s.at("values"), "sweep.values");
        if (v.size() == 0) fail("sweep.values: grid must be non-empty");
        c.sweep.values.assign(v.data(), v.data() + v.size());
        for (double x : c.sweep.values) {
            if (c.sweep.variable == "N" && (x < 1 || x != std::floor(x))) fail("sweep.values: N must be a positive integer");
            if (c.sweep.variable == "sigma" && !(x > 0)) fail("sweep.values: sigma must be positive");
            if (c.sweep.variable == "tau") {
                try {
                    validate_tau(x);
                } catch (const Error& e) {
                    fail(e.what());
                }
            }
        }
        c.sweep.replications = get_uint(s, "replications", 1, "sweep");
        if (c.sweep.replications < 1) fail("sweep.replications: must be at least 1");
    } else if (doc.contains("sweep")) {
        fail("config: \"sweep\" block given but kind is not sweep");
    }
    c.write_trajectory = get_bool(doc, "trajectory", true, "config");
    c.echo = to_json(c);
    return c;
}

ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        fail("config parse error in " + path + ": " + e.what());
    }
    return parse_config(doc, seed);
}

OnlineSetup build_online(const ExperimentConfig& c) {
    require(c.source != ProblemSource::OfflineQp, "build_online: offline problem");
    const double tau = c.solver.tau;
    if (c.source == ProblemSource::Qp) {
        const auto inst = make_qp_instance(c.qp);
        SolverConfig cfg = inst.solver_config(tau);
        cfg.sigma = c.solver.resolve_sigma(inst.N());
        if (c.solver.T) cfg.T = PsdOperator(*c.solver.T);
        const bool closed = c.closed_form && c.solver.sigma_sqrtN && cfg.T.matrix().isZero(0.0);
        OnlineSetup s{inst.stream, inst.g, inst.cc, cfg, inst.initial_state(), {}};
        if (closed) s.stepper = inst.closed_form_stepper(cfg);
        return s;
    }
    const auto& g = c.general;
    OnlineStream stream = [&] {
        if (g.stream.kind == "linear") return make_linear_stream(g.A.cols(), g.stream.N, g.stream.seed, g.stream.c_scale);
        QuadraticStreamParams p;
        p.n = g.A.cols();
        p.N = g.stream.N;
        p.seed = g.stream.seed;
        p.G_scale = g.stream.G_scale;
        p.c_scale = g.stream.c_scale;
        p.fixed_G = g.stream.fixed_G;
        p.sigma = g.stream.sigma_op;
        return make_quadratic_stream(p);
    }();
    CouplingConstraint cc(LinearMap(g.A), LinearMap(g.B), g.c);
    SolverConfig cfg;
    cfg.sigma = c.solver.resolve_sigma(g.stream.N);
    cfg.tau = tau;
    cfg.T = PsdOperator(c.solver.T.value_or(Mat::Zero(g.B.cols(), g.B.cols())));
    cfg.s_schedule = constant_schedule(PsdOperator(c.solver.S.value_or(Mat::Zero(g.A.cols(), g.A.cols()))));
    cfg.scaling = ProximalScaling::Online;
    const SolverState init = SolverState::initial(g.x1.value_or(Vec::Zero(g.A.cols())),
                                                  g.z1.value_or(Vec::Zero(g.B.cols())),
                                                  g.y1.value_or(Vec::Zero(g.c.size())));
    return OnlineSetup{stream, make_regularizer(g.g, g.B.cols()), cc, cfg, init, {}};
}

OfflineSetup build_offline(const ExperimentConfig& c) {
    require(c.source == ProblemSource::OfflineQp, "build_offline: online problem");
    const auto inst = make_offline_qp(c.offline);
    const double sigma = c.solver.resolve_sigma(c.iterations);
    return OfflineSetup{inst.problem, inst.solver_config(sigma, c.solver.tau), inst.feasible_start(), c.iterations};
}

ExperimentConfig sweep_point(const ExperimentConfig& c, double value, std::size_t rep) {
    Json doc = c.echo;
    doc.erase("sweep");
    doc["kind"] = c.source == ProblemSource::OfflineQp ? "offline" : "online";
    const char* block = c.source == ProblemSource::Qp ? "qp" : c.source == ProblemSource::General ? "problem" : "offline_qp";
    Json& seed_holder = c.source == ProblemSource::General ? doc[block]["stream"] : doc[block];
    seed_holder["seed"] = seed_holder["seed"].get<std::uint64_t>() + rep;
    if (c.sweep.variable == "N") {
        const auto N = static_cast<std::uint64_t>(value);
        if (c.source == ProblemSource::OfflineQp) doc[block]["iterations"] = N;
        else seed_holder["N"] = N;
    } else if (c.sweep.variable == "sigma") {
        doc["solver"]["sigma"] = value;
    } else {
        doc["solver"]["tau"] = value;
    }
    return parse_config(doc);
}

}  // namespace ospadmm
