#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "infostab/canonical.hpp"
#include "infostab/sampler.hpp"
#include "infostab/stability.hpp"

namespace infostab::harness {

/// One experiment: an exact solution, optional sup-norm perturbation, the
/// residual sampler, and the certification options. Mirrors the flat
/// key = value config file one to one; flags override file values.
struct ExperimentConfig {
  double alpha = 2.0;
  std::string family = "power";  // power | log
  double a = 2.0;
  double b = 5.0;
  double lambda = 2.0;
  double c = -1.0;

  double eps = 0.0;
  std::string noise_kind = "uniform";  // uniform | bump
  std::uint64_t noise_seed = 1;

  long samples = 20000;
  double margin = 1e-4;
  std::uint64_t seed = 1;
  std::string scheme = "halton";  // halton | uniform

  int deviation_points = 10000;
  std::optional<double> deviation_margin;

  std::string domain = "open";  // open | closed
  std::optional<double> f0;     // closed-domain endpoints; defaulted consistently
  std::optional<double> f1;     // with the family when unset

  std::string out;          // certificate/report path ("" = stdout only)
  std::string dump;         // optional CSV dump of instance samples
  int dump_points = 512;

  void validate() const;

  Alpha make_alpha() const;
  UnitIntervalFunction exact_solution() const;
  UnitIntervalFunction instance() const;  // exact solution, perturbed when eps > 0
  ClosedFunction closed_instance() const;
  OpenTriangleSampler sampler() const;
  stability::CertifyOptions certify_options() const;

  /// Canonical flat text form (sorted keys); parsing it back is lossless.
  std::string to_kv_text() const;
};

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::string& path);

/// Builtin function specs for --input: "power:a,b" (exponent from alpha),
/// "log:lambda,c", "tab:file.csv" or a bare "*.csv" path.
UnitIntervalFunction parse_input_spec(const std::string& spec, const Alpha& alpha);

}  // namespace infostab::harness
