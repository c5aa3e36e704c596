#include "infostab/entropy.hpp"

#include <cmath>
#include <string>

#include "infostab/stability.hpp"

namespace infostab::entropy {

namespace {

constexpr double kMergeTol = 1e-15;

double pow_sum(const ProbabilityVector& p, double a) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::pow(p[i], a);
  return s;
}

/// One recursion step: merged head mass and the I2 term it spins off.
double step_term(const UnitIntervalFunction& i2, double a, double p1, double p2) {
  const double s = p1 + p2;
  if (!(s < 1.0 - kMergeTol)) {
    throw Error(ErrorKind::OutOfDomain, "merged mass " + std::to_string(s) + " reaches 1");
  }
  return std::pow(s, a) * i2.eval(p2 / s);
}

}  // namespace

double shannon(const ProbabilityVector& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h -= p[i] * std::log2(p[i]);
  return h;
}

double degree_alpha(const ProbabilityVector& p, const Alpha& alpha) {
  const double a = alpha.value();
  return (pow_sum(p, a) - 1.0) / (std::exp2(1.0 - a) - 1.0);
}

double recursive_build(const UnitIntervalFunction& i2, const Alpha& alpha,
                       const ProbabilityVector& p) {
  const double a = alpha.value();
  std::vector<double> cur = p.components();
  double total = 0.0;
  while (cur.size() > 2) {
    total += step_term(i2, a, cur[0], cur[1]);
    cur[1] += cur[0];
    cur.erase(cur.begin());
  }
  // I2(u, v) = f(v) with u + v = 1.
  return total + i2.eval(cur[1]);
}

double semi_symmetry_defect(const std::function<double(const ProbabilityVector&)>& i3,
                            const std::vector<ProbabilityVector>& triples) {
  double worst = 0.0;
  for (const auto& t : triples) {
    if (t.size() != 3) {
      throw Error(ErrorKind::InvalidArgument, "semi-symmetry defect needs triples");
    }
    const ProbabilityVector swapped({t[0], t[2], t[1]});
    worst = std::max(worst, std::fabs(i3(t) - i3(swapped)));
  }
  return worst;
}

const UnitIntervalFunction& reduce_to_f(const MeasureSystem& system) { return system.i2; }

std::vector<double> measure_slack(const MeasureSystem& system, int n_max, std::uint64_t seed,
                                  int samples_per_n) {
  if (n_max < 3) {
    throw Error(ErrorKind::InvalidArgument, "slack measurement needs n_max >= 3");
  }
  std::vector<double> slack(static_cast<std::size_t>(n_max - 1), 0.0);

  // The semi-symmetry defect of the generated I3 blows up toward the
  // p2 -> 1 and p3 -> 1 corners for negative exponents, exactly like the
  // equation residual; triples drawn through the corner-refined triangle
  // sampler (p3, p2) = (x, y) probe that geometry.
  const OpenTriangleSampler corners(samples_per_n, 1e-4, seed ^ 0x1357ULL);
  double eps1 = 0.0;
  for (const auto& [x, y] : corners.samples()) {
    const ProbabilityVector t({1.0 - x - y, y, x});
    const ProbabilityVector swapped({t[0], t[2], t[1]});
    eps1 = std::max(eps1, std::fabs(recursive_build(system.i2, system.alpha, t) -
                                    recursive_build(system.i2, system.alpha, swapped)));
  }
  slack[0] = eps1;

  for (int n = 3; n <= n_max; ++n) {
    SimplexSampler vectors(static_cast<std::size_t>(n), seed ^ (0x2468ULL + n));
    double defect = 0.0;
    for (int s = 0; s < samples_per_n; ++s) {
      const ProbabilityVector p = vectors.next();
      std::vector<double> merged(p.components().begin() + 1, p.components().end());
      merged[0] += p[0];
      const double direct = recursive_build(system.i2, system.alpha, p);
      const double split = recursive_build(system.i2, system.alpha, ProbabilityVector(merged)) +
                           step_term(system.i2, system.alpha.value(), p[0], p[1]);
      defect = std::max(defect, std::fabs(direct - split));
    }
    slack[static_cast<std::size_t>(n - 2)] = defect;
  }
  return slack;
}

SystemReport system_certificate(const MeasureSystem& system, int n_max, std::uint64_t seed,
                                int samples_per_n) {
  if (n_max < 3 || n_max > 8) {
    throw Error(ErrorKind::InvalidArgument, "system certification covers 3 <= n_max <= 8");
  }
  if (system.slack.size() + 1 < static_cast<std::size_t>(n_max)) {
    throw Error(ErrorKind::InsufficientSlackSequence,
                "need eps_1..eps_" + std::to_string(n_max - 1) + ", got " +
                    std::to_string(system.slack.size()) + " entries");
  }
  for (double e : system.slack) {
    if (!(e >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "slack entries must be nonnegative");
    }
  }

  const Alpha& alpha = system.alpha;
  const double a = alpha.value();
  const double eps1 = system.slack[0];
  const double eps2 = system.slack[1];
  const double eps_combined = 2.0 * eps2 + eps1;
  const double k = k_alpha(alpha);

  const CanonicalSolution candidate = stability::extract_candidate(system.i2, alpha);
  double coef_c = 0.0, coef_d = 0.0, lambda = 0.0, log_c = 0.0;
  if (alpha.is_zero()) {
    lambda = candidate.log_plus_const().lambda;
    log_c = candidate.log_plus_const().c;
  } else {
    coef_c = (std::exp2(1.0 - a) - 1.0) * candidate.power().a;
    coef_d = candidate.power().b - candidate.power().a;
  }

  SystemReport report;
  report.alpha = a;
  report.eps_combined = eps_combined;
  report.slack = system.slack;
  report.candidate_form = alpha.is_zero() ? "c*H0_n + lambda*ln(p1)" : "c*Ha_n + d*(p1^a - 1)";
  report.pass = true;

  for (int n = 3; n <= n_max; ++n) {
    double slack_prefix = 0.0;  // sum_{k=2}^{n-1} eps_k (empty for n = 2)
    for (int kk = 2; kk <= n - 1; ++kk) slack_prefix += system.slack[static_cast<std::size_t>(kk - 1)];

    SystemRow row;
    row.n = n;
    row.samples = samples_per_n;
    row.pass = samples_per_n > 0;
    SimplexSampler vectors(static_cast<std::size_t>(n), seed ^ (0x9e37ULL * n));
    for (int s = 0; s < samples_per_n; ++s) {
      const ProbabilityVector p = vectors.next();
      const double in = recursive_build(system.i2, alpha, p);
      double jn;
      if (alpha.is_zero()) {
        jn = log_c * degree_alpha(p, alpha) + lambda * std::log(p[0]);
      } else {
        jn = coef_c * degree_alpha(p, alpha) + coef_d * (std::pow(p[0], a) - 1.0);
      }
      const double deviation = std::fabs(in - jn);

      double bound = slack_prefix;
      if (alpha.is_negative()) {
        double factor = 1.0;
        double partial = 0.0;
        for (int kk = 1; kk <= n - 1; ++kk) {
          partial += std::pow(p[static_cast<std::size_t>(kk - 1)], a);
          if (kk >= 2) factor += partial;
        }
        bound += k * eps_combined * factor;
      } else {
        bound += k * eps_combined * static_cast<double>(n - 1);
      }

      const bool ok = deviation <= bound + 1e-9 * (1.0 + bound);
      const double util = bound > 0.0 ? deviation / bound : (deviation > 0.0 ? HUGE_VAL : 0.0);
      if (deviation > row.max_deviation) {
        row.max_deviation = deviation;
        row.bound_at_max = bound;
      }
      row.max_utilization = std::max(row.max_utilization, util);
      row.pass = row.pass && ok;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace infostab::entropy
