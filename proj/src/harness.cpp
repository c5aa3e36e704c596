#include "infostab/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "infostab/parallel.hpp"

namespace infostab::harness {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json truth_of(const ExperimentConfig& config) {
  json truth{{"alpha", config.alpha}, {"family", config.family}};
  if (config.family == "power") {
    truth["a"] = config.a;
    truth["b"] = config.b;
  } else {
    truth["lambda"] = config.lambda;
    truth["c"] = config.c;
  }
  return truth;
}

json score_candidate(const ExperimentConfig& config, const CanonicalSolution& candidate) {
  json score;
  if (config.family == "power") {
    score["err_a"] = std::fabs(candidate.power().a - config.a);
    score["err_b"] = std::fabs(candidate.power().b - config.b);
  } else {
    score["err_lambda"] = std::fabs(candidate.log_plus_const().lambda - config.lambda);
    score["err_c"] = std::fabs(candidate.log_plus_const().c - config.c);
  }
  return score;
}

}  // namespace

Instance gen_instance(const ExperimentConfig& config) {
  config.validate();
  UnitIntervalFunction f = config.instance();

  json manifest;
  manifest["config"] = config.to_kv_text();
  manifest["truth"] = truth_of(config);
  manifest["exact"] = config.eps == 0.0;
  manifest["noise"] = json{{"eps", config.eps},
                           {"kind", config.noise_kind},
                           {"seed", config.noise_seed}};
  if (config.domain == "closed") {
    const ClosedFunction cf = config.closed_instance();
    manifest["boundary"] = json{{"f0", cf.f0}, {"f1", cf.f1}};
  }

  if (!config.dump.empty()) {
    const double lo = std::max(config.margin, 1e-3);
    store_tabulated_csv(tabulate(f, lo, 1.0 - lo, config.dump_points), config.dump);
    manifest["dump"] = config.dump;
  }
  return Instance{config, std::move(f), std::move(manifest)};
}

std::vector<double> sweep_grid(double lo, double hi, int count, bool log_spaced) {
  if (count < 2 || !(lo < hi)) {
    throw Error(ErrorKind::InvalidArgument, "sweep grid needs count >= 2 and lo < hi");
  }
  if (log_spaced && !(lo * hi > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "log-spaced sweep needs endpoints of one sign");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    if (log_spaced) {
      const double sign = lo < 0.0 ? -1.0 : 1.0;
      grid[static_cast<std::size_t>(i)] =
          sign * std::exp(std::log(std::fabs(lo)) + t * (std::log(std::fabs(hi)) - std::log(std::fabs(lo))));
    } else {
      grid[static_cast<std::size_t>(i)] = lo + t * (hi - lo);
    }
  }
  return grid;
}

std::string sweep_constants(const std::vector<double>& alphas) {
  std::ostringstream csv;
  csv << "alpha,k_alpha,t_alpha,kt_relation_residual\n";
  for (double a : alphas) {
    Alpha alpha(0.0);
    try {
      alpha = Alpha(a);
    } catch (const Error&) {
      continue;  // guard band
    }
    const double k = k_alpha(alpha);
    csv << fmt(a) << ',' << fmt(k) << ',';
    if (alpha.is_positive()) {
      const double t = t_alpha(alpha);
      const double via_t = (4.0 * t + 3.0) / std::fabs(std::exp2(1.0 - a) - 1.0);
      csv << fmt(t) << ',' << fmt(std::fabs(k - via_t) / k);
    } else {
      csv << ',';
    }
    csv << '\n';
  }
  return csv.str();
}

json run_one(const ExperimentConfig& config) {
  const Instance instance = gen_instance(config);
  const Alpha alpha = config.make_alpha();
  const OpenTriangleSampler sampler = config.sampler();
  const stability::CertifyOptions options = config.certify_options();

  stability::StabilityCertificate cert =
      config.domain == "closed"
          ? stability::certify_closed(config.closed_instance(), alpha, sampler, options)
          : stability::certify_open(instance.f, alpha, sampler, options);

  json item;
  item["manifest"] = instance.manifest;
  item["certificate"] = to_json(cert);
  item["scoring"] = score_candidate(config, cert.candidate);
  item["utilization"] = cert.bound > 0.0 ? cert.sup_deviation / cert.bound
                                         : (cert.sup_deviation > 0.0 ? HUGE_VAL : 0.0);

  // Independent minimax fit on a subsample of the deviation grid.
  const double dev_margin = options.deviation_margin.value_or(sampler.margin());
  const auto grid = oracle::uniform_grid(dev_margin, 200);
  const oracle::FitResult fit = alpha.is_zero() ? oracle::chebyshev_fit_log(instance.f, grid)
                                                : oracle::chebyshev_fit_power(instance.f, alpha, grid);
  item["oracle"] = to_json(fit);
  item["oracle_vs_constructive"] =
      json{{"oracle_dev", fit.dev},
           {"constructive_dev", cert.sup_deviation},
           {"sandwich_holds", fit.dev <= cert.sup_deviation + 1e-12 * (1.0 + cert.sup_deviation)}};
  item["status"] = cert.pass ? "pass" : "fail";
  return item;
}

namespace {

json assemble_summary(std::vector<json> items) {
  json summary;
  long n_pass = 0, n_fail = 0, n_error = 0;
  double max_util = 0.0;
  json arr = json::array();
  for (auto& item : items) {
    const std::string status = item["status"];
    if (status == "pass") ++n_pass;
    else if (status == "fail") ++n_fail;
    else ++n_error;
    if (item.contains("utilization") && item["utilization"].is_number()) {
      max_util = std::max(max_util, item["utilization"].get<double>());
    }
    arr.push_back(std::move(item));
  }
  summary["items"] = std::move(arr);
  summary["n_pass"] = n_pass;
  summary["n_fail"] = n_fail;
  summary["n_error"] = n_error;
  const long done = n_pass + n_fail;
  summary["pass_rate"] = done > 0 ? static_cast<double>(n_pass) / static_cast<double>(done) : 0.0;
  summary["max_utilization"] = max_util;
  summary["timestamp_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  return summary;
}

}  // namespace

json run_batch(const std::vector<ExperimentConfig>& configs) {
  if (configs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "batch needs at least one config");
  }
  std::vector<json> items(configs.size());
  detail::parallel_chunks(configs.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        items[i] = run_one(configs[i]);
      } catch (const std::exception& e) {
        items[i] = json{{"status", "error"}, {"error", e.what()}};
      }
      items[i]["index"] = i;
    }
  });
  return assemble_summary(std::move(items));
}

json run_batch_paths(const std::vector<std::string>& config_paths) {
  if (config_paths.empty()) {
    throw Error(ErrorKind::InvalidArgument, "batch needs at least one config");
  }
  // Parse failures (including guard-band alphas) become error entries, not
  // batch aborts.
  std::vector<json> items(config_paths.size());
  detail::parallel_chunks(config_paths.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        items[i] = run_one(load_config(config_paths[i]));
      } catch (const std::exception& e) {
        items[i] = json{{"status", "error"}, {"error", e.what()}};
      }
      items[i]["index"] = i;
      items[i]["config_path"] = config_paths[i];
    }
  });
  return assemble_summary(std::move(items));
}

}  // namespace infostab::harness
