#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "infostab/entropy.hpp"
#include "infostab/harness.hpp"
#include "infostab/report.hpp"

namespace {

using infostab::Alpha;
using infostab::Error;
using infostab::UnitIntervalFunction;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(infostab::ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << text;
}

std::vector<double> parse_probabilities(const std::string& csv) {
  std::vector<double> p;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      p.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw Error(infostab::ErrorKind::ParseError, "bad probability '" + cell + "'");
    }
  }
  return p;
}

// One probability vector per CSV row.
std::vector<std::vector<double>> load_probability_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(infostab::ErrorKind::IoError, "cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(parse_probabilities(line));
  }
  if (rows.empty()) throw Error(infostab::ErrorKind::ParseError, "'" + path + "' has no rows");
  return rows;
}

struct InstanceFlags {
  std::string input = "power:2,5";
  double eps = 0.0;
  std::string noise_kind = "uniform";
  std::uint64_t noise_seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "builtin spec (power:a,b | log:lambda,c | tab:file.csv) or CSV path");
    cmd->add_option("--eps", eps, "sup-norm perturbation radius (0 = exact)");
    cmd->add_option("--noise-kind", noise_kind, "uniform | bump");
    cmd->add_option("--noise-seed", noise_seed, "noise seed");
  }

  UnitIntervalFunction build(const Alpha& alpha) const {
    UnitIntervalFunction f = infostab::harness::parse_input_spec(input, alpha);
    if (eps > 0.0) {
      f = UnitIntervalFunction::perturbed(
          f, infostab::PerturbationSpec(eps, infostab::parse_noise_kind(noise_kind), noise_seed));
    }
    return f;
  }
};

struct SamplerFlags {
  long samples = 20000;
  double margin = 1e-4;
  std::uint64_t seed = 1;
  std::string scheme = "halton";

  void attach(CLI::App* cmd) {
    cmd->add_option("--samples", samples, "residual sample count");
    cmd->add_option("--margin", margin, "triangle margin");
    cmd->add_option("--seed", seed, "sampler seed");
    cmd->add_option("--scheme", scheme, "halton | uniform");
  }

  infostab::OpenTriangleSampler build() const {
    return infostab::OpenTriangleSampler(samples, margin, seed,
                                         infostab::parse_sample_scheme(scheme));
  }
};

int run(int argc, char** argv) {
  CLI::App app{"infostab: stability certification for the parametric fundamental equation of information"};
  app.require_subcommand(1);

  // ---- constants ----------------------------------------------------------
  auto* constants = app.add_subcommand("constants", "sweep the stability constants K and T");
  double c_lo = -5.0, c_hi = 5.0;
  int c_count = 101;
  bool c_log = false;
  std::string c_out;
  constants->add_option("--alpha-min", c_lo, "grid start");
  constants->add_option("--alpha-max", c_hi, "grid end");
  constants->add_option("--count", c_count, "grid size");
  constants->add_flag("--log-spaced", c_log, "log-spaced grid (endpoints of one sign)");
  constants->add_option("--out", c_out, "CSV output path (default stdout)");

  // ---- residual -----------------------------------------------------------
  auto* residual = app.add_subcommand("residual", "sampled sup of the equation residual");
  double r_alpha = 2.0;
  InstanceFlags r_instance;
  SamplerFlags r_sampler;
  std::string r_report;
  residual->add_option("--alpha", r_alpha, "exponent")->required();
  r_instance.attach(residual);
  r_sampler.attach(residual);
  residual->add_option("--report", r_report, "JSON report path");

  // ---- extract ------------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "constructive candidate extraction");
  double e_alpha = 2.0;
  InstanceFlags e_instance;
  std::string e_report;
  extract->add_option("--alpha", e_alpha, "exponent")->required();
  e_instance.attach(extract);
  extract->add_option("--report", e_report, "JSON report path");

  // ---- certify ------------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "stability certificate (exit 0 pass, 2 fail)");
  std::string cert_config;
  certify->add_option("--config", cert_config, "flat key=value config file; flags override");
  double cf_alpha = 2.0;
  InstanceFlags cf_instance;
  SamplerFlags cf_sampler;
  std::string cf_domain = "open";
  double cf_f0 = 0.0, cf_f1 = 0.0;
  int cf_dev_points = 10000;
  double cf_dev_margin = -1.0;
  std::string cf_report;
  auto* cf_alpha_opt = certify->add_option("--alpha", cf_alpha, "exponent");
  cf_instance.attach(certify);
  cf_sampler.attach(certify);
  certify->add_option("--domain", cf_domain, "open | closed");
  auto* cf_f0_opt = certify->add_option("--f0", cf_f0, "closed-domain value at 0");
  auto* cf_f1_opt = certify->add_option("--f1", cf_f1, "closed-domain value at 1");
  certify->add_option("--deviation-points", cf_dev_points, "deviation grid size");
  certify->add_option("--deviation-margin", cf_dev_margin, "deviation grid margin (default: sampler margin)");
  certify->add_option("--report", cf_report, "certificate JSON path");

  // ---- entropy ------------------------------------------------------------
  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon and degree-alpha entropy");
  std::string en_p = "0.5,0.25,0.25";
  std::string en_csv;
  double en_alpha = 2.0;
  entropy_cmd->add_option("--p", en_p, "probabilities, comma separated");
  entropy_cmd->add_option("--csv", en_csv, "CSV of probability vectors, one per row");
  entropy_cmd->add_option("--alpha", en_alpha, "exponent (for the degree-alpha entropy)");

  // ---- recursive ----------------------------------------------------------
  auto* recursive = app.add_subcommand("recursive", "recursive build vs closed form");
  std::string rc_p = "0.5,0.25,0.25";
  std::string rc_csv;
  double rc_alpha = 2.0;
  recursive->add_option("--p", rc_p, "probabilities, comma separated");
  recursive->add_option("--csv", rc_csv, "CSV of probability vectors, one per row");
  recursive->add_option("--alpha", rc_alpha, "exponent")->required();

  // ---- system-certify -----------------------------------------------------
  auto* system = app.add_subcommand("system-certify", "per-n stability report for a measure system");
  double sy_alpha = 2.0;
  double sy_eps = 0.0;
  std::uint64_t sy_noise_seed = 1, sy_seed = 1;
  std::string sy_noise_kind = "uniform";
  int sy_nmax = 5, sy_samples = 10000, sy_slack_samples = 10000;
  std::string sy_report;
  system->add_option("--alpha", sy_alpha, "exponent")->required();
  system->add_option("--eps", sy_eps, "perturbation of the two-symbol measure");
  system->add_option("--noise-kind", sy_noise_kind, "uniform | bump");
  system->add_option("--noise-seed", sy_noise_seed, "noise seed");
  system->add_option("--n-max", sy_nmax, "largest n (3..8)");
  system->add_option("--samples", sy_samples, "simplex samples per n");
  system->add_option("--slack-samples", sy_slack_samples, "samples for slack measurement");
  system->add_option("--seed", sy_seed, "simplex sampler seed");
  system->add_option("--report", sy_report, "JSON report path");

  // ---- oracle-fit ---------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle-fit", "independent minimax fit next to the constructive one");
  double o_alpha = 2.0;
  InstanceFlags o_instance;
  double o_margin = 1e-4;
  int o_points = 200;
  std::string o_report;
  oracle_cmd->add_option("--alpha", o_alpha, "exponent")->required();
  o_instance.attach(oracle_cmd);
  oracle_cmd->add_option("--grid-margin", o_margin, "fitting grid margin");
  oracle_cmd->add_option("--grid-points", o_points, "fitting grid size (>= 200)");
  oracle_cmd->add_option("--report", o_report, "JSON report path");

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance and manifest from a config");
  std::string g_config;
  std::string g_manifest = "manifest.json";
  gen->add_option("--config", g_config, "config file")->required();
  gen->add_option("--manifest", g_manifest, "manifest output path");

  // ---- batch --------------------------------------------------------------
  auto* batch = app.add_subcommand("batch", "run many configs; summary JSON");
  std::vector<std::string> b_configs;
  std::string b_out = "batch.json";
  batch->add_option("--configs", b_configs, "config files")->required()->expected(-1);
  batch->add_option("--out", b_out, "summary output path");

  CLI11_PARSE(app, argc, argv);

  if (constants->parsed()) {
    const auto grid = infostab::harness::sweep_grid(c_lo, c_hi, c_count, c_log);
    const std::string csv = infostab::harness::sweep_constants(grid);
    if (c_out.empty()) {
      std::cout << csv;
    } else {
      write_text(csv, c_out);
      std::cout << "wrote " << c_out << "\n";
    }
    return kExitOk;
  }

  if (residual->parsed()) {
    const Alpha alpha(r_alpha);
    const auto f = r_instance.build(alpha);
    const auto report = infostab::equation::sup_residual(f, alpha, r_sampler.build());
    const json j = infostab::to_json(report);
    std::cout << j.dump(2) << "\n";
    if (!r_report.empty()) infostab::write_json(j, r_report);
    return kExitOk;
  }

  if (extract->parsed()) {
    const Alpha alpha(e_alpha);
    const auto f = e_instance.build(alpha);
    const auto candidate = infostab::stability::extract_candidate(f, alpha);
    json j{{"alpha", e_alpha}, {"candidate", infostab::to_json(candidate)}};
    if (!alpha.is_zero()) {
      // Deviation of the alternative centering f - c(1-x)^a, for comparison
      // with the centering actually used (which subtracts c[(1-x)^a - 1]).
      const double c = infostab::stability::extract_c(f, alpha);
      const double f0_half_alt = f.eval(0.5) - c * std::exp2(-alpha.value());
      const double a_alt = f0_half_alt / (std::exp2(1.0 - alpha.value()) - 1.0);
      const infostab::CanonicalSolution alt(infostab::PowerCandidate{a_alt, a_alt + c});
      j["diagnostics"] = json{
          {"deviation", infostab::stability::sup_deviation_open(f, alpha, candidate, 1e-3, 4001)},
          {"alt_centering_deviation",
           infostab::stability::sup_deviation_open(f, alpha, alt, 1e-3, 4001)}};
    }
    std::cout << j.dump(2) << "\n";
    if (!e_report.empty()) infostab::write_json(j, e_report);
    return kExitOk;
  }

  if (certify->parsed()) {
    infostab::harness::ExperimentConfig config;
    if (!cert_config.empty()) config = infostab::harness::load_config(cert_config);
    if (cf_alpha_opt->count() > 0) config.alpha = cf_alpha;
    if (certify->count("--input") > 0 || cert_config.empty()) {
      // Flags describe the instance directly; map onto the config's family.
      const Alpha alpha(config.alpha);
      const auto f = cf_instance.build(alpha);
      if (const auto* p = f.as_power()) {
        config.family = "power";
        config.a = p->a;
        config.b = p->b;
      } else if (const auto* l = f.as_log()) {
        config.family = "log";
        config.lambda = l->lambda;
        config.c = l->c;
      } else if (const auto* pe = f.as_perturbed(); pe != nullptr) {
        if (const auto* p2 = pe->base->as_power()) {
          config.family = "power";
          config.a = p2->a;
          config.b = p2->b;
        } else if (const auto* l2 = pe->base->as_log()) {
          config.family = "log";
          config.lambda = l2->lambda;
          config.c = l2->c;
        } else {
          throw Error(infostab::ErrorKind::InvalidArgument,
                      "certify --input supports power and log instances; use the library for tables");
        }
      } else {
        throw Error(infostab::ErrorKind::InvalidArgument,
                    "certify --input supports power and log instances; use the library for tables");
      }
    }
    if (certify->count("--eps") > 0) config.eps = cf_instance.eps;
    if (certify->count("--noise-kind") > 0) config.noise_kind = cf_instance.noise_kind;
    if (certify->count("--noise-seed") > 0) config.noise_seed = cf_instance.noise_seed;
    if (certify->count("--samples") > 0) config.samples = cf_sampler.samples;
    if (certify->count("--margin") > 0) config.margin = cf_sampler.margin;
    if (certify->count("--seed") > 0) config.seed = cf_sampler.seed;
    if (certify->count("--scheme") > 0) config.scheme = cf_sampler.scheme;
    if (certify->count("--domain") > 0) config.domain = cf_domain;
    if (cf_f0_opt->count() > 0) config.f0 = cf_f0;
    if (cf_f1_opt->count() > 0) config.f1 = cf_f1;
    if (certify->count("--deviation-points") > 0) config.deviation_points = cf_dev_points;
    if (certify->count("--deviation-margin") > 0) config.deviation_margin = cf_dev_margin;
    if (certify->count("--report") > 0) config.out = cf_report;
    config.validate();

    const Alpha alpha = config.make_alpha();
    const auto sampler = config.sampler();
    const auto options = config.certify_options();
    const auto cert = config.domain == "closed"
                          ? infostab::stability::certify_closed(config.closed_instance(), alpha,
                                                                sampler, options)
                          : infostab::stability::certify_open(config.instance(), alpha, sampler,
                                                              options);
    const json j = infostab::to_json(cert);
    std::cout << j.dump(2) << "\n";
    if (!config.out.empty()) infostab::write_json(j, config.out);
    if (!cert.pass) {
      std::cout << "verdict: fail at sampled resolution\n";
      return kExitFail;
    }
    std::cout << "verdict: pass\n";
    return kExitOk;
  }

  if (entropy_cmd->parsed()) {
    std::vector<std::vector<double>> rows;
    if (!en_csv.empty()) {
      rows = load_probability_rows(en_csv);
    } else {
      rows.push_back(parse_probabilities(en_p));
    }
    json items = json::array();
    for (const auto& row : rows) {
      const infostab::ProbabilityVector p(row);
      json j{{"shannon_bits", infostab::entropy::shannon(p)}};
      try {
        const Alpha alpha(en_alpha, 1e-9);
        j["degree_alpha"] = infostab::entropy::degree_alpha(p, alpha);
        j["alpha"] = en_alpha;
      } catch (const Error&) {
        j["degree_alpha"] = nullptr;  // alpha too close to 1
      }
      items.push_back(std::move(j));
    }
    std::cout << (items.size() == 1 ? items[0] : items).dump(2) << "\n";
    return kExitOk;
  }

  if (recursive->parsed()) {
    const Alpha alpha(rc_alpha);
    std::vector<std::vector<double>> rows;
    if (!rc_csv.empty()) {
      rows = load_probability_rows(rc_csv);
    } else {
      rows.push_back(parse_probabilities(rc_p));
    }
    const double tau = 1.0 / (std::exp2(1.0 - rc_alpha) - 1.0);
    const auto i2 = UnitIntervalFunction::power(tau, tau, alpha);
    json items = json::array();
    for (const auto& row : rows) {
      const infostab::ProbabilityVector p(row);
      const double built = infostab::entropy::recursive_build(i2, alpha, p);
      const double closed = infostab::entropy::degree_alpha(p, alpha);
      items.push_back(json{{"alpha", rc_alpha},
                           {"recursive", built},
                           {"closed_form", closed},
                           {"abs_difference", std::fabs(built - closed)}});
    }
    std::cout << (items.size() == 1 ? items[0] : items).dump(2) << "\n";
    return kExitOk;
  }

  if (system->parsed()) {
    const Alpha alpha(sy_alpha);
    UnitIntervalFunction i2 = alpha.is_zero()
                                  ? UnitIntervalFunction::log(2.0, -1.0)
                                  : UnitIntervalFunction::power(1.0 / (std::exp2(1.0 - sy_alpha) - 1.0),
                                                                1.0 / (std::exp2(1.0 - sy_alpha) - 1.0),
                                                                alpha);
    if (sy_eps > 0.0) {
      i2 = UnitIntervalFunction::perturbed(
          i2, infostab::PerturbationSpec(sy_eps, infostab::parse_noise_kind(sy_noise_kind), sy_noise_seed));
    }
    infostab::entropy::MeasureSystem ms{i2, alpha, {}};
    ms.slack = infostab::entropy::measure_slack(ms, sy_nmax, sy_seed, sy_slack_samples);
    const auto report = infostab::entropy::system_certificate(ms, sy_nmax, sy_seed, sy_samples);
    const json j = infostab::to_json(report);
    std::cout << j.dump(2) << "\n";
    if (!sy_report.empty()) infostab::write_json(j, sy_report);
    return report.pass ? kExitOk : kExitFail;
  }

  if (oracle_cmd->parsed()) {
    const Alpha alpha(o_alpha);
    const auto f = o_instance.build(alpha);
    const auto grid = infostab::oracle::uniform_grid(o_margin, o_points);
    const auto fit = alpha.is_zero() ? infostab::oracle::chebyshev_fit_log(f, grid)
                                     : infostab::oracle::chebyshev_fit_power(f, alpha, grid);
    const auto candidate = infostab::stability::extract_candidate(f, alpha);
    double constructive_dev = 0.0;
    for (double x : grid) {
      constructive_dev = std::max(constructive_dev, std::fabs(f.eval(x) - candidate.eval(x, alpha)));
    }
    const json j{{"alpha", o_alpha},
                 {"oracle", infostab::to_json(fit)},
                 {"constructive",
                  json{{"candidate", infostab::to_json(candidate)}, {"dev", constructive_dev}}},
                 {"sandwich_holds", fit.dev <= constructive_dev + 1e-12 * (1.0 + constructive_dev)}};
    std::cout << j.dump(2) << "\n";
    if (!o_report.empty()) infostab::write_json(j, o_report);
    return kExitOk;
  }

  if (gen->parsed()) {
    const auto instance = infostab::harness::gen_instance(infostab::harness::load_config(g_config));
    infostab::write_json(instance.manifest, g_manifest);
    std::cout << "wrote " << g_manifest << "\n";
    return kExitOk;
  }

  if (batch->parsed()) {
    const json summary = infostab::harness::run_batch_paths(b_configs);
    infostab::write_json(summary, b_out);
    std::cout << "pass " << summary["n_pass"] << ", fail " << summary["n_fail"] << ", error "
              << summary["n_error"] << "; wrote " << b_out << "\n";
    return kExitOk;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
