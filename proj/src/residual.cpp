#include "infostab/residual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infostab/parallel.hpp"

namespace infostab::equation {

namespace {

void check_in_triangle(double x, double y) {
  if (!(x > 0.0 && y > 0.0 && x + y < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "(" + std::to_string(x) + ", " + std::to_string(y) +
                                            ") is not strictly inside the open triangle");
  }
}

double checked_combination(const std::function<double(double)>& fn, double lo, double hi, double x,
                           double y, double combined, const char* what) {
  for (double v : {x, y, combined}) {
    if (!(v >= lo && v <= hi)) {
      throw Error(ErrorKind::OutOfDomain, std::string(what) + " pair (" + std::to_string(x) + ", " +
                                              std::to_string(y) + ") leaves [" + std::to_string(lo) +
                                              ", " + std::to_string(hi) + "]");
    }
  }
  return fn(combined);
}

}  // namespace

double residual(const UnitIntervalFunction& f, const Alpha& alpha, double x, double y) {
  check_in_triangle(x, y);
  const double a = alpha.value();
  const double wx = std::pow(1.0 - x, a);
  const double wy = std::pow(1.0 - y, a);
  // Grouped so that x == y cancels term by term, exactly.
  const double r = (f.eval(x) - f.eval(y)) + (wx * f.eval(y / (1.0 - x)) - wy * f.eval(x / (1.0 - y)));
  if (!std::isfinite(r)) {
    throw Error(ErrorKind::NonFiniteValue, "residual overflowed at (" + std::to_string(x) + ", " +
                                               std::to_string(y) + ")");
  }
  return r;
}

ResidualReport sup_residual(const UnitIntervalFunction& f, const Alpha& alpha,
                            const OpenTriangleSampler& sampler) {
  const auto pts = sampler.samples();
  const std::size_t n = pts.size();
  std::vector<double> mags(n);

  detail::parallel_chunks(n, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        mags[i] = std::fabs(residual(f, alpha, pts[i].first, pts[i].second));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NonFiniteValue) {
          throw Error(ErrorKind::NonFiniteValue,
                      std::string(e.what()) + " [sample " + std::to_string(i) + " = (" +
                          std::to_string(pts[i].first) + ", " + std::to_string(pts[i].second) + ")]");
        }
        throw;
      }
    }
  });

  ResidualReport report;
  report.samples = static_cast<long>(n);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(mags[i])) {
      throw Error(ErrorKind::NonFiniteValue, "NaN residual at sample " + std::to_string(i));
    }
    if (mags[i] > mags[best]) best = i;
  }
  report.eps_hat = mags[best];
  report.argmax_x = pts[best].first;
  report.argmax_y = pts[best].second;

  std::vector<double> sorted = mags;
  const std::size_t rank = static_cast<std::size_t>(0.99 * static_cast<double>(n - 1));
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(rank), sorted.end());
  report.p99 = sorted[rank];
  return report;
}

double additive_defect(const std::function<double(double)>& a,
                       const std::vector<std::pair<double, double>>& pairs, double lo, double hi) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double v = checked_combination(a, lo, hi, x, y, x + y, "additive");
    worst = std::max(worst, std::fabs(v - a(x) - a(y)));
  }
  return worst;
}

double multiplicative_defect(const std::function<double(double)>& mu,
                             const std::vector<std::pair<double, double>>& pairs, double lo,
                             double hi) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double v = checked_combination(mu, lo, hi, x, y, x * y, "multiplicative");
    worst = std::max(worst, std::fabs(v - mu(x) * mu(y)));
  }
  return worst;
}

double logarithmic_defect(const std::function<double(double)>& l,
                          const std::vector<std::pair<double, double>>& pairs, double lo,
                          double hi) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double v = checked_combination(l, lo, hi, x, y, x * y, "logarithmic");
    worst = std::max(worst, std::fabs(v - l(x) - l(y)));
  }
  return worst;
}

}  // namespace infostab::equation
