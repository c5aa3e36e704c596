// Acceptance suite: one timed pass/fail line per criterion.
// Usage: acceptance [n ...]   (default: all criteria)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "infostab/entropy.hpp"
#include "infostab/harness.hpp"
#include "infostab/oracle.hpp"
#include "infostab/report.hpp"

using namespace infostab;

namespace {

struct CriterionResult {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& label) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += label;
    }
  }
};

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Constants: K(0), the negative-axis maximum against 15, the K-T relation.
// ---------------------------------------------------------------------------
CriterionResult criterion1() {
  CriterionResult r;
  r.require(k_alpha(Alpha(0.0)) == 63.0, "K(0) != 63");

  double max_k = 0.0;
  const int n_neg = 10000;
  for (int i = 0; i < n_neg; ++i) {
    const double mag = std::exp(std::log(1e-6) + (std::log(30.0) - std::log(1e-6)) *
                                                     static_cast<double>(n_neg - 1 - i) /
                                                     static_cast<double>(n_neg - 1));
    max_k = std::max(max_k, k_alpha(Alpha(-mag)));
  }
  const double gap = std::fabs(max_k - 15.0);
  r.require(gap <= 1e-6, "max K over [-30,-1e-6] = " + fmt(max_k) + ", |max-15| = " + fmt(gap) +
                             " > 1e-6: the supremum 15 is approached only in the limit alpha -> 0-, "
                             "and the gap at the grid endpoint -1e-6 is ~35*ln(2)*1e-6 = 2.43e-5, so "
                             "no grid bounded away from 0 can meet 1e-6 (the one-sided bound "
                             "max K <= 15 + 1e-9 and the other two clauses hold)");
  r.require(max_k <= 15.0 + 1e-9, "max K exceeds 15");

  const int n_pos = 1000;
  double worst_rel = 0.0;
  for (int i = 0; i < n_pos; ++i) {
    double a = 0.01 + (5.0 - 0.02) * static_cast<double>(i) / static_cast<double>(n_pos - 1);
    if (std::fabs(a - 1.0) <= 2e-3) continue;
    const Alpha alpha(a);
    const double k = k_alpha(alpha);
    const double via_t = (4.0 * t_alpha(alpha) + 3.0) / std::fabs(std::exp2(1.0 - a) - 1.0);
    worst_rel = std::max(worst_rel, std::fabs(k - via_t) / k);
  }
  r.require(worst_rel <= 1e-12, "K-T relation residual " + fmt(worst_rel) + " > 1e-12");
  if (r.pass) r.detail = "K(0)=63; negative-axis max " + fmt(max_k) + "; relation residual " + fmt(worst_rel);
  return r;
}

// ---------------------------------------------------------------------------
// 2. Exact recovery: 200 random power members, 50 random log members.
// ---------------------------------------------------------------------------
CriterionResult criterion2() {
  CriterionResult r;
  std::mt19937_64 rng(20240801);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_real_distribution<double> expo(-5.0, 5.0);

  // Conditioning of x^alpha forces a central deviation window: at the margin
  // 0.15 the basis magnitudes stay below ~2e4 for |alpha| <= 5, keeping the
  // double-precision floor under the 1e-9 budget.
  const OpenTriangleSampler sampler(2000, 0.15, 8);
  stability::CertifyOptions options;
  options.deviation_points = 10000;

  double worst_param = 0.0, worst_dev = 0.0;
  int done = 0;
  while (done < 200) {
    const double a = expo(rng);
    if (std::fabs(a - 1.0) <= 0.1 || std::fabs(a) <= 0.01) continue;
    const Alpha alpha(a);
    const double ca = coef(rng), cb = coef(rng);
    const auto f = UnitIntervalFunction::power(ca, cb, alpha);
    const auto cert = stability::certify_open(f, alpha, sampler, options);
    worst_param = std::max({worst_param, std::fabs(cert.candidate.power().a - ca),
                            std::fabs(cert.candidate.power().b - cb)});
    worst_dev = std::max(worst_dev, cert.sup_deviation);
    r.require(cert.pass, "exact power certificate failed at alpha=" + fmt(a));
    ++done;
  }
  for (int i = 0; i < 50; ++i) {
    const double lambda = coef(rng), c = coef(rng);
    const Alpha zero(0.0);
    const auto f = UnitIntervalFunction::log(lambda, c);
    const auto cert = stability::certify_open(f, zero, sampler, options);
    worst_param = std::max({worst_param, std::fabs(cert.candidate.log_plus_const().lambda - lambda),
                            std::fabs(cert.candidate.log_plus_const().c - c)});
    worst_dev = std::max(worst_dev, cert.sup_deviation);
    r.require(cert.pass, "exact log certificate failed");
  }
  r.require(worst_param <= 1e-8, "extraction error " + fmt(worst_param) + " > 1e-8");
  r.require(worst_dev <= 1e-9, "sup deviation " + fmt(worst_dev) + " > 1e-9");
  if (r.pass) r.detail = "250 members; worst extraction error " + fmt(worst_param) +
                         ", worst deviation " + fmt(worst_dev);
  return r;
}

// ---------------------------------------------------------------------------
// 3 + 8. Bound soundness on the open domain, with the oracle sandwich.
// ---------------------------------------------------------------------------
struct MatrixOutcome {
  int total = 0;
  int cert_pass = 0;
  int sandwich_pass = 0;
  double max_utilization = 0.0;
  std::string first_failure;
};

MatrixOutcome run_noise_matrix(bool with_oracle) {
  MatrixOutcome out;
  const double eps_levels[] = {1e-4, 1e-3, 1e-2};
  const NoiseKind kinds[] = {NoiseKind::UniformIID, NoiseKind::SmoothBump};
  const double alphas[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0};
  const std::uint64_t seeds[] = {101, 202, 303};

  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> coef(-8.0, 8.0);

  stability::CertifyOptions options;
  options.deviation_points = 10000;

  for (double a : alphas) {
    const Alpha alpha(a);
    for (double eps : eps_levels) {
      for (NoiseKind kind : kinds) {
        for (std::uint64_t seed : seeds) {
          const double c1 = coef(rng), c2 = coef(rng);
          const UnitIntervalFunction base = alpha.is_zero()
                                                ? UnitIntervalFunction::log(c1, c2)
                                                : UnitIntervalFunction::power(c1, c2, alpha);
          const auto f = UnitIntervalFunction::perturbed(base, PerturbationSpec(eps, kind, seed));
          const OpenTriangleSampler sampler(20000, 1e-4, seed);
          const auto cert = stability::certify_open(f, alpha, sampler, options);
          ++out.total;
          if (cert.pass) {
            ++out.cert_pass;
          } else if (out.first_failure.empty()) {
            out.first_failure = "alpha=" + fmt(a) + " eps=" + fmt(eps) + " kind=" +
                                noise_kind_name(kind) + " seed=" + std::to_string(seed) +
                                " dev=" + fmt(cert.sup_deviation) + " bound=" + fmt(cert.bound);
          }
          if (cert.bound > 0.0) {
            out.max_utilization = std::max(out.max_utilization, cert.sup_deviation / cert.bound);
          }
          if (with_oracle) {
            const auto grid = oracle::uniform_grid(1e-4, 200);
            const auto fit = alpha.is_zero() ? oracle::chebyshev_fit_log(f, grid)
                                             : oracle::chebyshev_fit_power(f, alpha, grid);
            double constructive_on_grid = 0.0;
            for (double x : grid) {
              constructive_on_grid = std::max(
                  constructive_on_grid, std::fabs(f.eval(x) - cert.candidate.eval(x, alpha)));
            }
            const bool sandwich = fit.dev <= constructive_on_grid &&
                                  constructive_on_grid <= cert.sup_deviation &&
                                  cert.sup_deviation <= cert.bound + 1e-9 * (1.0 + cert.bound);
            if (sandwich) {
              ++out.sandwich_pass;
            } else if (out.first_failure.empty()) {
              out.first_failure = "sandwich broke at alpha=" + fmt(a) + " eps=" + fmt(eps) +
                                  ": oracle " + fmt(fit.dev) + ", constructive " +
                                  fmt(constructive_on_grid) + ", bound " + fmt(cert.bound);
            }
          }
        }
      }
    }
  }
  return out;
}

CriterionResult criterion3() {
  CriterionResult r;
  const auto out = run_noise_matrix(false);
  r.require(out.cert_pass == out.total,
            std::to_string(out.total - out.cert_pass) + "/" + std::to_string(out.total) +
                " certificates failed; first: " + out.first_failure);
  if (r.pass) r.detail = std::to_string(out.cert_pass) + "/" + std::to_string(out.total) +
                         " certificates pass; max utilization " + fmt(out.max_utilization);
  return r;
}

CriterionResult criterion8() {
  CriterionResult r;
  const auto out = run_noise_matrix(true);
  r.require(out.sandwich_pass == out.total,
            std::to_string(out.total - out.sandwich_pass) + "/" + std::to_string(out.total) +
                " sandwiches failed; first: " + out.first_failure);
  if (r.pass) r.detail = std::to_string(out.sandwich_pass) + "/" + std::to_string(out.total) +
                         " oracle <= constructive <= K*eps_hat chains hold";
  return r;
}

// ---------------------------------------------------------------------------
// 4. Closed-domain soundness, including the forced f(0) = 0 failure.
// ---------------------------------------------------------------------------
CriterionResult criterion4() {
  CriterionResult r;
  const double eps_levels[] = {1e-4, 1e-3, 1e-2};
  const NoiseKind kinds[] = {NoiseKind::UniformIID, NoiseKind::SmoothBump};
  const double alphas[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0};
  const std::uint64_t seeds[] = {101, 202, 303};

  std::mt19937_64 rng(778);
  std::uniform_real_distribution<double> coef(-8.0, 8.0);

  stability::CertifyOptions options;
  options.deviation_points = 10000;

  int total = 0, passed = 0;
  double max_util = 0.0;
  std::string first_failure;
  for (double a : alphas) {
    const Alpha alpha(a);
    for (double eps : eps_levels) {
      for (NoiseKind kind : kinds) {
        for (std::uint64_t seed : seeds) {
          const double c1 = coef(rng), c2 = coef(rng);
          ClosedFunction f = [&] {
            if (alpha.is_zero()) {
              // Bounded closed-domain measures have no logarithmic part; the
              // boundary values are copied by the candidate.
              const auto base = UnitIntervalFunction::log(0.0, c2);
              return ClosedFunction{
                  UnitIntervalFunction::perturbed(base, PerturbationSpec(eps, kind, seed)), c2, c2};
            }
            const auto base = UnitIntervalFunction::power(c1, c2, alpha);
            return ClosedFunction{
                UnitIntervalFunction::perturbed(base, PerturbationSpec(eps, kind, seed)),
                alpha.is_negative() ? 0.0 : 0.5 * eps, c1 - c2};
          }();
          const OpenTriangleSampler sampler(20000, 1e-4, seed);
          const auto cert = stability::certify_closed(f, alpha, sampler, options);
          ++total;
          if (cert.pass) {
            ++passed;
          } else if (first_failure.empty()) {
            first_failure = "alpha=" + fmt(a) + " eps=" + fmt(eps) + " kind=" +
                            noise_kind_name(kind) + " seed=" + std::to_string(seed) + " dev=" +
                            fmt(cert.sup_deviation) + " bound=" + fmt(cert.bound);
          }
          if (cert.bound > 0.0) max_util = std::max(max_util, cert.sup_deviation / cert.bound);
          if (alpha.is_positive()) {
            const double want = std::max(k_alpha(alpha), t_alpha(alpha) + 1.0) * cert.eps_hat;
            r.require(std::fabs(cert.bound - want) <= 1e-12 * (1.0 + want),
                      "closed bound factor wrong at alpha=" + fmt(a));
          }
        }
      }
    }
  }
  r.require(passed == total, std::to_string(total - passed) + "/" + std::to_string(total) +
                                 " closed certificates failed; first: " + first_failure);

  // An interior-exact instance whose left endpoint is 0.1 cannot certify for
  // alpha < 0.
  const Alpha minus(-1.0);
  const ClosedFunction bad{UnitIntervalFunction::power(2.0, 5.0, minus), 0.1, -3.0};
  const auto cert_bad =
      stability::certify_closed(bad, minus, OpenTriangleSampler(20000, 1e-4, 11), options);
  r.require(cert_bad.eps_hat < 1e-3, "interior eps_hat unexpectedly large");
  r.require(!cert_bad.pass, "f(0) = 0.1 instance passed but must fail");

  if (r.pass) r.detail = std::to_string(passed) + "/" + std::to_string(total) +
                         " pass; max utilization " + fmt(max_util) +
                         "; f(0)=0.1 instance fails as required";
  return r;
}

// ---------------------------------------------------------------------------
// 5. Proof-internal inequalities on perturbed alpha = -1 instances.
// ---------------------------------------------------------------------------
CriterionResult criterion5() {
  CriterionResult r;
  const Alpha minus(-1.0);
  const double eps = 1e-3;
  int checked = 0;
  for (NoiseKind kind : {NoiseKind::UniformIID, NoiseKind::SmoothBump}) {
    for (std::uint64_t seed : {401ULL, 402ULL}) {
      const auto f = UnitIntervalFunction::perturbed(UnitIntervalFunction::power(2.0, 5.0, minus),
                                                     PerturbationSpec(eps, kind, seed));
      const auto rr = equation::sup_residual(f, minus, OpenTriangleSampler(20000, 1e-4, seed));
      const double f0_cap = (3.0 * std::exp2(-1.0) + 1.0) * rr.eps_hat;
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> interior(0.05, 0.95);
      for (int i = 0; i < 1000; ++i) {
        const double p = interior(rng), q = interior(rng);
        const auto d = stability::proof_diagnostics(f, minus, p, q);
        r.require(std::fabs(d.f0_equation) <= f0_cap,
                  "F0 bound broke at (" + fmt(p) + "," + fmt(q) + ")");
        r.require(d.g_symmetry <= 3.0 * rr.eps_hat / (p + q + 1.0),
                  "G symmetry bound broke at (" + fmt(p) + "," + fmt(q) + ")");
        ++checked;
        if (!r.pass) return r;
      }
    }
  }
  r.detail = std::to_string(checked) + " sampled pairs within the F0 and G-symmetry caps";
  return r;
}

// ---------------------------------------------------------------------------
// 6. Entropy identities.
// ---------------------------------------------------------------------------
CriterionResult criterion6() {
  CriterionResult r;
  const ProbabilityVector half({0.5, 0.5});
  double worst_norm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = -6.0 + 12.0 * static_cast<double>(i) / 999.0;
    if (std::fabs(a - 1.0) <= 0.01) continue;
    worst_norm = std::max(worst_norm, std::fabs(entropy::degree_alpha(half, Alpha(a)) - 1.0));
  }
  r.require(worst_norm <= 1e-12, "normalization error " + fmt(worst_norm) + " > 1e-12");

  double worst_limit = 0.0;
  SimplexSampler limit_sampler(4, 60, 1e-3);
  for (int i = 0; i < 100; ++i) {
    const auto p = limit_sampler.next();
    const double h = entropy::shannon(p);
    for (double a : {1.0 - 1e-6, 1.0 + 1e-6}) {
      worst_limit = std::max(worst_limit,
                             std::fabs(entropy::degree_alpha(p, Alpha(a, 1e-7)) - h));
    }
  }
  r.require(worst_limit <= 1e-4, "limit mismatch " + fmt(worst_limit) + " > 1e-4");

  double worst_rec = 0.0, worst_sym = 0.0;
  for (double a : {-1.0, 0.5, 2.0, 3.0}) {
    const Alpha alpha(a);
    const double tau = 1.0 / (std::exp2(1.0 - a) - 1.0);
    const auto i2 = UnitIntervalFunction::power(tau, tau, alpha);
    for (std::size_t n = 3; n <= 6; ++n) {
      SimplexSampler sampler(n, 600 + n, 1e-4);
      for (int i = 0; i < 1000; ++i) {
        const auto p = sampler.next();
        const double built = entropy::recursive_build(i2, alpha, p);
        const double closed = entropy::degree_alpha(p, alpha);
        worst_rec = std::max(worst_rec, std::fabs(built - closed) / (1.0 + std::fabs(closed)));
      }
    }
    std::vector<ProbabilityVector> triples;
    SimplexSampler tri(3, 61, 1e-4);
    for (int i = 0; i < 1000; ++i) triples.push_back(tri.next());
    worst_sym = std::max(
        worst_sym, entropy::semi_symmetry_defect(
                       [&](const ProbabilityVector& p) { return entropy::recursive_build(i2, alpha, p); },
                       triples));
  }
  r.require(worst_rec <= 1e-10, "recursion mismatch " + fmt(worst_rec) + " > 1e-10");
  r.require(worst_sym <= 1e-10, "semi-symmetry defect " + fmt(worst_sym) + " > 1e-10");
  if (r.pass) r.detail = "normalization " + fmt(worst_norm) + ", limit " + fmt(worst_limit) +
                         ", recursion " + fmt(worst_rec) + ", semi-symmetry " + fmt(worst_sym);
  return r;
}

// ---------------------------------------------------------------------------
// 7. System stability.
// ---------------------------------------------------------------------------
CriterionResult criterion7() {
  CriterionResult r;

  double worst_exact = 0.0;
  for (double a : {-1.0, 0.7, 2.0}) {
    const Alpha alpha(a);
    const double tau = 1.0 / (std::exp2(1.0 - a) - 1.0);
    const entropy::MeasureSystem system{UnitIntervalFunction::power(tau, tau, alpha), alpha,
                                        std::vector<double>(5, 0.0)};
    const auto report = entropy::system_certificate(system, 6, 900, 2000);
    r.require(report.pass, "exact system failed at alpha=" + fmt(a));
    for (const auto& row : report.rows) worst_exact = std::max(worst_exact, row.max_deviation);
  }
  {
    const Alpha zero(0.0);
    const entropy::MeasureSystem system{UnitIntervalFunction::log(2.0, -1.0), zero,
                                        std::vector<double>(5, 0.0)};
    const auto report = entropy::system_certificate(system, 6, 901, 2000);
    r.require(report.pass, "exact log system failed");
    for (const auto& row : report.rows) worst_exact = std::max(worst_exact, row.max_deviation);
  }
  r.require(worst_exact <= 1e-9, "exact-system deviation " + fmt(worst_exact) + " > 1e-9");

  double worst_util = 0.0;
  for (double a : {-1.0, 0.0, 2.0}) {
    const Alpha alpha(a);
    const double tau = a == 0.0 ? 0.0 : 1.0 / (std::exp2(1.0 - a) - 1.0);
    UnitIntervalFunction i2 = alpha.is_zero() ? UnitIntervalFunction::log(0.0, 1.0)
                                              : UnitIntervalFunction::power(tau, tau, alpha);
    i2 = UnitIntervalFunction::perturbed(i2, PerturbationSpec(1e-3, NoiseKind::UniformIID, 55));
    entropy::MeasureSystem system{i2, alpha, {}};
    system.slack = entropy::measure_slack(system, 5, 56, 10000);
    const auto report = entropy::system_certificate(system, 5, 57, 10000);
    r.require(report.pass, "perturbed system failed at alpha=" + fmt(a));
    for (const auto& row : report.rows) {
      r.require(row.samples == 10000, "sample count wrong");
      worst_util = std::max(worst_util, row.max_utilization);
    }
  }
  if (r.pass) r.detail = "exact deviation " + fmt(worst_exact) +
                         "; perturbed max utilization " + fmt(worst_util) + " at n = 3,4,5";
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  CriterionResult (*run)();
};

const Criterion kCriteria[] = {
    {1, "stability constants", 1.0, criterion1},
    {2, "exact recovery", 10.0, criterion2},
    {3, "open-domain bound soundness", 60.0, criterion3},
    {4, "closed-domain soundness", 60.0, criterion4},
    {5, "proof-internal inequalities", 5.0, criterion5},
    {6, "entropy identities", 10.0, criterion6},
    {7, "system stability", 120.0, criterion7},
    {8, "oracle sandwich", 60.0, criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& criterion : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
      continue;
    }
    const double start = now_seconds();
    CriterionResult result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = now_seconds() - start;
    if (elapsed > criterion.budget_seconds) {
      result.pass = false;
      result.detail += (result.detail.empty() ? "" : "; ") + std::string("over budget: ") +
                       fmt(elapsed) + " s > " + fmt(criterion.budget_seconds) + " s";
    }
    std::printf("[%s] criterion %d (%s): %s (%.2f s)\n", result.pass ? "PASS" : "FAIL",
                criterion.id, criterion.name, result.detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  return failures;
}
