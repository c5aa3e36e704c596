#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "infostab/config.hpp"
#include "infostab/oracle.hpp"
#include "infostab/report.hpp"

namespace infostab::harness {

struct Instance {
  ExperimentConfig config;
  UnitIntervalFunction f;
  nlohmann::json manifest;
};

/// Builds the instance (exact solution plus perturbation) and a manifest
/// recording all parameters and the true coefficients for later scoring.
/// Writes the optional tabulated dump when the config asks for one.
Instance gen_instance(const ExperimentConfig& config);

/// CSV rows alpha, k_alpha, t_alpha, kt_relation_residual; the latter two are
/// blank when alpha <= 0. Alphas inside the guard band are skipped.
std::string sweep_constants(const std::vector<double>& alphas);
std::vector<double> sweep_grid(double lo, double hi, int count, bool log_spaced);

/// Runs certification, the independent minimax fit, and manifest scoring for
/// each config. Per-item failures are isolated as error entries; items run
/// concurrently up to the worker cap and the report is assembled in config
/// order. The JSON is byte-stable except for the timestamp_unix_ms field.
nlohmann::json run_batch(const std::vector<ExperimentConfig>& configs);
nlohmann::json run_batch_paths(const std::vector<std::string>& config_paths);

/// Single-config pipeline shared by the batch and the certify subcommand.
nlohmann::json run_one(const ExperimentConfig& config);

}  // namespace infostab::harness
