#include "infostab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infostab/parallel.hpp"

namespace infostab::stability {

namespace {

constexpr double kVerdictSlack = 1e-9;

bool verdict(double sup_deviation, double bound) {
  return sup_deviation <= bound + kVerdictSlack * (1.0 + std::fabs(bound));
}

double max_over_grid(int points, double lo, double hi, const std::function<double(double)>& fn) {
  if (points < 2 || !(lo < hi)) {
    throw Error(ErrorKind::InvalidArgument, "deviation grid needs points >= 2 and lo < hi");
  }
  std::vector<double> vals(static_cast<std::size_t>(points));
  infostab::detail::parallel_chunks(
      vals.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
          vals[i] = fn(x);
        }
      });
  double worst = 0.0;
  for (double v : vals) {
    if (std::isnan(v)) throw Error(ErrorKind::NonFiniteValue, "NaN in deviation scan");
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace

double lift_F(const UnitIntervalFunction& f, const Alpha& alpha, double u, double v) {
  if (!(u > 0.0 && v > 0.0)) {
    throw Error(ErrorKind::OutOfDomain, "lift requires u, v > 0");
  }
  const double value = std::pow(u + v, alpha.value()) * f.eval(v / (u + v));
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteValue, "lift overflowed at (" + std::to_string(u) + ", " +
                                               std::to_string(v) + ")");
  }
  return value;
}

double defect_g(const UnitIntervalFunction& f, const Alpha& alpha, double u) {
  if (!(u > 0.0)) {
    throw Error(ErrorKind::OutOfDomain, "defect g requires u > 0");
  }
  // (1+u)^a [f(1/(1+u)) - f(u/(1+u))]: two evaluations of f.
  const double w = std::pow(1.0 + u, alpha.value());
  const double value = w * (f.eval(1.0 / (1.0 + u)) - f.eval(u / (1.0 + u)));
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFiniteValue, "defect g overflowed at u = " + std::to_string(u));
  }
  return value;
}

double extract_c(const UnitIntervalFunction& f, const Alpha& alpha) {
  const double a = alpha.value();
  switch (alpha.cls()) {
    case AlphaClass::Zero:
      throw Error(ErrorKind::ZeroAlphaHasNoC, "the alpha = 0 family has no power constant c");
    case AlphaClass::Negative:
      return defect_g(f, alpha, 2.0) / (std::exp2(a) - 1.0);
    case AlphaClass::PositiveNotOne:
      return defect_g(f, alpha, 0.5) / (std::exp2(-a) - 1.0);
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable alpha class");
}

std::vector<double> default_log_fit_grid() {
  std::vector<double> grid(64);
  const double lo = 0.125, hi = 8.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(grid.size() - 1));
  }
  return grid;
}

LogFitResult fit_lambda_log(const UnitIntervalFunction& f, const std::vector<double>& u_grid) {
  if (u_grid.size() < 8) {
    throw Error(ErrorKind::DegenerateGrid, "log fit needs at least 8 grid points");
  }
  const Alpha zero(0.0);
  double num = 0.0, den = 0.0;
  std::vector<double> g_vals(u_grid.size());
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    if (!(u_grid[i] > 0.0)) {
      throw Error(ErrorKind::DegenerateGrid, "log fit grid must be positive");
    }
    g_vals[i] = defect_g(f, zero, u_grid[i]);
    const double lu = std::log(u_grid[i]);
    num += g_vals[i] * lu;
    den += lu * lu;
  }
  if (!(den > 0.0)) {
    throw Error(ErrorKind::DegenerateGrid, "log fit grid carries no spread in ln u");
  }
  LogFitResult result;
  result.lambda = num / den;

  const double hull_lo = *std::min_element(u_grid.begin(), u_grid.end());
  const double hull_hi = *std::max_element(u_grid.begin(), u_grid.end());
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    for (std::size_t j = i; j < u_grid.size(); ++j) {
      const double uv = u_grid[i] * u_grid[j];
      if (uv < hull_lo || uv > hull_hi) continue;
      const double defect = std::fabs(defect_g(f, zero, uv) - g_vals[i] - g_vals[j]);
      result.log_defect = std::max(result.log_defect, defect);
    }
  }
  return result;
}

CanonicalSolution extract_candidate(const UnitIntervalFunction& f, const Alpha& alpha) {
  const double a = alpha.value();
  if (alpha.is_zero()) {
    const LogFitResult fit = fit_lambda_log(f, default_log_fit_grid());
    const double c = f.eval(0.5) - fit.lambda * std::log(0.5);
    return LogPlusConstCandidate{fit.lambda, c};
  }
  const double c = extract_c(f, alpha);
  // f0(1/2) = f(1/2) - c[(1/2)^a - 1]; the centering term is itself an exact
  // solution, so the centered function keeps the residual of f.
  const double f0_half = f.eval(0.5) - c * (std::exp2(-a) - 1.0);
  const double coef_a = f0_half / (std::exp2(1.0 - a) - 1.0);
  return PowerCandidate{coef_a, coef_a + c};
}

double sup_deviation_open(const UnitIntervalFunction& f, const Alpha& alpha,
                          const CanonicalSolution& candidate, double margin, int points) {
  if (points < 2 || !(margin > 0.0 && margin < 0.5)) {
    throw Error(ErrorKind::InvalidArgument, "deviation grid needs points >= 2, margin in (0, 0.5)");
  }
  return max_over_grid(points, margin, 1.0 - margin, [&](double x) {
    return std::fabs(f.eval(x) - candidate.eval(x, alpha));
  });
}

StabilityCertificate certify_open(const UnitIntervalFunction& f, const Alpha& alpha,
                                  const OpenTriangleSampler& sampler,
                                  const CertifyOptions& options) {
  const equation::ResidualReport rr = equation::sup_residual(f, alpha, sampler);
  const CanonicalSolution candidate = extract_candidate(f, alpha);
  const double dev_margin = options.deviation_margin.value_or(sampler.margin());
  const double dev = sup_deviation_open(f, alpha, candidate, dev_margin, options.deviation_points);
  const double k = k_alpha(alpha);
  const double bound = k * rr.eps_hat;

  StabilityCertificate cert{
      alpha.value(), rr.eps_hat, k,       candidate,        dev,
      bound,         verdict(dev, bound), rr.samples,       sampler.margin(),
      sampler.seed(), Domain::Open};
  return cert;
}

ClosedSolution extend_closed(const CanonicalSolution& candidate, const Alpha& alpha, double f0,
                             double f1) {
  candidate.require_matches(alpha);
  if (alpha.is_zero()) {
    return H2Solution{candidate.log_plus_const().c, f0, f1};
  }
  return H1Solution{candidate.power().a, candidate.power().b, alpha};
}

StabilityCertificate certify_closed(const ClosedFunction& f, const Alpha& alpha,
                                    const OpenTriangleSampler& sampler,
                                    const CertifyOptions& options) {
  const equation::ResidualReport rr = equation::sup_residual(f.interior, alpha, sampler);
  const CanonicalSolution candidate = extract_candidate(f.interior, alpha);
  const ClosedSolution closed = extend_closed(candidate, alpha, f.f0, f.f1);

  const double dev_margin = options.deviation_margin.value_or(sampler.margin());
  const double interior_dev =
      max_over_grid(options.deviation_points, dev_margin, 1.0 - dev_margin,
                    [&](double x) { return std::fabs(f.eval(x) - closed.eval(x)); });
  const double dev = std::max({interior_dev, std::fabs(f.f0 - closed.eval(0.0)),
                               std::fabs(f.f1 - closed.eval(1.0))});

  const double k = k_alpha(alpha);
  double factor = k;
  if (alpha.is_positive()) factor = std::max(k, t_alpha(alpha) + 1.0);
  const double bound = factor * rr.eps_hat;

  StabilityCertificate cert{
      alpha.value(), rr.eps_hat, k,       candidate,        dev,
      bound,         verdict(dev, bound), rr.samples,       sampler.margin(),
      sampler.seed(), Domain::Closed};
  return cert;
}

ProofDiagnostics proof_diagnostics(const UnitIntervalFunction& f, const Alpha& alpha, double p,
                                   double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "diagnostics need p, q in (0,1)");
  }
  const double a = alpha.value();

  std::function<double(double)> f0;
  if (alpha.is_zero()) {
    const double lambda = fit_lambda_log(f, default_log_fit_grid()).lambda;
    f0 = [&f, lambda](double x) { return f.eval(x) - lambda * std::log(1.0 - x); };
  } else {
    const double c = extract_c(f, alpha);
    f0 = [&f, c, a](double x) { return f.eval(x) - c * (std::pow(1.0 - x, a) - 1.0); };
  }

  ProofDiagnostics d;
  const double pq = p * q;
  d.f0_equation = f0(p) + std::pow(p, a) * f0(q) - f0(pq) -
                  std::pow(1.0 - pq, a) * f0((1.0 - p) / (1.0 - pq));

  const auto G = [&](double u, double v) { return lift_F(f, alpha, u, v) + defect_g(f, alpha, v); };
  d.g_symmetry = std::fabs(G(p, q) - G(q, p));
  if (!std::isfinite(d.f0_equation) || !std::isfinite(d.g_symmetry)) {
    throw Error(ErrorKind::NonFiniteValue, "diagnostics overflowed");
  }
  return d;
}

const char* domain_name(Domain domain) { return domain == Domain::Open ? "open" : "closed"; }

}  // namespace infostab::stability
