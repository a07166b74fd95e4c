#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ospadmm/config.hpp"

namespace ospadmm {

struct CommandOptions {
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    double tol = 1e-8;
    std::ostream* log = nullptr;  // messages; std::cerr when null
};

/// Exit codes: 0 all asserted audits pass, 1 audit failure (failing ids logged), 2 bad input.
int cmd_run(const std::string& config_path, const CommandOptions& options);
int cmd_sweep(const std::string& config_path, const CommandOptions& options);
int cmd_audit(const std::string& trajectory_path, const CommandOptions& options);

/// Sets the OpenMP thread count from OSPADMM_THREADS when present.
void apply_thread_env();

/// "%.17g", with inf/-inf/nan spelled out.
std::string format_double(double v);

/// Trajectory file contents: header config plus iterates 1..N+1 and the per-round records.
struct TrajectoryFile {
    Json config;
    std::string kind;  // online | offline
    Trajectory trajectory;
    std::vector<double> loss;         // rounds 1..N
    std::vector<double> residual_sq;  // rounds 1..N
};

void write_trajectory(const std::string& path, const Json& config, const std::string& kind, const Trajectory& traj,
                      const std::vector<double>& loss, const std::vector<double>& residual_sq);
/// Throws ConfigError on any malformed or empty file.
TrajectoryFile read_trajectory(const std::string& path);

}  // namespace ospadmm
