#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ospadmm/experiment.hpp"
#include "ospadmm/qp.hpp"

namespace ospadmm {

using Json = nlohmann::json;

/// Malformed or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
    using Error::Error;
};

enum class RunKind { Online, Offline, Sweep };
enum class ProblemSource { Qp, General, OfflineQp };

struct StreamSpec {
    std::string kind = "quadratic";  // quadratic | linear
    std::size_t N = 1;
    std::uint64_t seed = 0;
    double G_scale = 1.0;
    double c_scale = 1.0;
    bool fixed_G = false;
    QuadraticCost::SigmaKind sigma_op = QuadraticCost::SigmaKind::Zero;
};

struct GeneralProblem {
    Mat A;
    Mat B;
    Vec c;
    Json g;  // regularizer description, validated at parse time
    StreamSpec stream;
    std::optional<Vec> x1, z1, y1;
};

struct SolverSpec {
    bool sigma_sqrtN = true;
    double sigma = 1.0;  // used when !sigma_sqrtN
    double tau = 1.0;
    std::optional<Mat> T;  // zero when absent
    std::optional<Mat> S;  // general problems only; zero when absent

    double resolve_sigma(std::size_t N) const;
};

struct SweepSpec {
    std::string variable = "N";  // N | sigma | tau
    std::vector<double> values;
    std::size_t replications = 1;
};

struct ExperimentConfig {
    RunKind kind = RunKind::Online;
    ProblemSource source = ProblemSource::Qp;
    QpGeneratorConfig qp;
    bool closed_form = true;  // QP stepper preference; needs σ = √N and 𝒯 = 0
    GeneralProblem general;
    OfflineQpConfig offline;
    std::size_t iterations = 0;  // offline
    SolverSpec solver;
    SweepSpec sweep;
    bool write_trajectory = true;
    Json echo;  // normalized config with the seed override applied

    std::size_t horizon() const;
};

/// Validates and normalizes a config document; `seed` overrides every seed in it.
ExperimentConfig parse_config(const Json& doc, std::optional<std::uint64_t> seed = std::nullopt);
ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed = std::nullopt);

/// Builds a regularizer from its JSON description for vectors of dimension n.
RegularizerPtr make_regularizer(const Json& spec, Eigen::Index n);

OnlineSetup build_online(const ExperimentConfig& config);
OfflineSetup build_offline(const ExperimentConfig& config);

/// Copy of the config with one sweep variable set and seeds shifted by the replication index.
ExperimentConfig sweep_point(const ExperimentConfig& config, double value, std::size_t rep);

}  // namespace ospadmm
