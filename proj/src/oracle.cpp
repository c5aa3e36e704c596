#include "infostab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "infostab/residual.hpp"

namespace infostab::oracle {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kObjectiveTol = 1e-12;

struct Basis {
  std::vector<double> f;     // target values on the grid
  std::vector<double> phi1;  // first basis function on the grid
  std::vector<double> phi2;  // second basis function on the grid
};

double minimax_objective(const Basis& basis, double a, double b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.f.size(); ++i) {
    worst = std::max(worst, std::fabs(basis.f[i] - a * basis.phi1[i] - b * basis.phi2[i]));
  }
  return worst;
}

/// Golden-section minimum of a unimodal objective. The bracket doubles and
/// recenters while the minimum hugs an edge.
double golden_min(const std::function<double(double)>& obj, double lo, double hi, double tol) {
  for (int expand = 0; expand < 80; ++expand) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = obj(x1), f2 = obj(x2);
    while (b - a > tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = obj(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = obj(x2);
      }
    }
    const double x = 0.5 * (a + b);
    const double width = hi - lo;
    if (x - lo > 0.01 * width && hi - x > 0.01 * width) return x;
    lo = x - width;
    hi = x + width;
  }
  throw Error(ErrorKind::DegenerateBasis, "minimax refinement failed to bracket a minimum");
}

/// Works in sup-normalized coordinates: both basis columns are scaled to
/// max-magnitude 1, which keeps the least-squares seed and the bracket radii
/// meaningful even when x^alpha spans many orders of magnitude on the grid.
FitResult fit_two_parameter(const Basis& raw, bool midrange_second) {
  const std::size_t n = raw.f.size();
  double r1 = 0.0, r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r1 = std::max(r1, std::fabs(raw.phi1[i]));
    r2 = std::max(r2, std::fabs(raw.phi2[i]));
  }
  if (!(r1 > 0.0 && r2 > 0.0)) {
    throw Error(ErrorKind::DegenerateBasis, "a basis function vanishes on the whole grid");
  }
  Basis basis = raw;
  for (std::size_t i = 0; i < n; ++i) {
    basis.phi1[i] /= r1;
    basis.phi2[i] /= r2;
  }

  double s11 = 0.0, s12 = 0.0, s22 = 0.0, s1f = 0.0, s2f = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s11 += basis.phi1[i] * basis.phi1[i];
    s12 += basis.phi1[i] * basis.phi2[i];
    s22 += basis.phi2[i] * basis.phi2[i];
    s1f += basis.phi1[i] * basis.f[i];
    s2f += basis.phi2[i] * basis.f[i];
  }
  const double det = s11 * s22 - s12 * s12;
  if (!(std::fabs(det) > 1e-10 * s11 * s22)) {
    throw Error(ErrorKind::DegenerateBasis, "basis functions are numerically dependent on the grid");
  }

  // The most independent row pair: any two optima of the objective differ, on
  // each grid row, by at most twice the worse objective value, so the pair's
  // 2x2 determinant turns measured objective values into certain coefficient
  // brackets. No heuristic bracket guessing.
  std::size_t j1 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::fabs(basis.phi1[i]) > std::fabs(basis.phi1[j1])) j1 = i;
  }
  std::size_t j2 = 0;
  double row_det = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = basis.phi1[j1] * basis.phi2[i] - basis.phi1[i] * basis.phi2[j1];
    if (std::fabs(d) > std::fabs(row_det)) {
      row_det = d;
      j2 = i;
    }
  }
  if (!(std::fabs(row_det) > 1e-10)) {
    throw Error(ErrorKind::DegenerateBasis, "no independent row pair on the grid");
  }

  const double a_ls = (s22 * s1f - s12 * s2f) / det;
  const double b_ls = (s11 * s2f - s12 * s1f) / det;
  const double e_ls = minimax_objective(basis, a_ls, b_ls);
  const double scale = 1.0 + std::fabs(a_ls) + std::fabs(b_ls) + e_ls;
  const double tol = 1e-13 * scale;

  // Conditional minimum over the second coordinate: exact midrange when the
  // second basis function is constant, golden section inside the certain
  // bracket |b - b_seed(a)| <= 2 E(a, b_seed(a)) otherwise (max |phi2| = 1).
  const auto inner = [&](double a, double* b_out) {
    if (midrange_second) {
      double hi = -std::numeric_limits<double>::infinity();
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        const double r = basis.f[i] - a * basis.phi1[i];
        hi = std::max(hi, r);
        lo = std::min(lo, r);
      }
      if (b_out) *b_out = 0.5 * (hi + lo);
      return 0.5 * (hi - lo);
    }
    const double b_seed = (s2f - a * s12) / s22;
    const double e_seed = minimax_objective(basis, a, b_seed);
    const double b = golden_min([&](double bb) { return minimax_objective(basis, a, bb); },
                                b_seed - 2.0 * e_seed - tol, b_seed + 2.0 * e_seed + tol, tol);
    if (b_out) *b_out = b;
    return minimax_objective(basis, a, b);
  };

  // |da * phi1 + db * phi2| <= 2 e_ls on rows j1 and j2 confines the first
  // coordinate of every minimizer to this radius around the seed.
  const double radius_a =
      2.0 * e_ls * (std::fabs(basis.phi2[j1]) + std::fabs(basis.phi2[j2])) / std::fabs(row_det) +
      tol;
  const double best_a =
      golden_min([&](double a) { return inner(a, nullptr); }, a_ls - radius_a, a_ls + radius_a, tol);

  // Alternate the two coordinate minimizations until the objective settles.
  double cur_a = best_a, cur_b = 0.0;
  double cur_dev = inner(best_a, &cur_b);
  for (int sweep = 0; sweep < 40; ++sweep) {
    const double a = golden_min([&](double aa) { return minimax_objective(basis, aa, cur_b); },
                                cur_a - radius_a / 8.0 - tol, cur_a + radius_a / 8.0 + tol, tol);
    double b = cur_b;
    const double v = inner(a, &b);
    const bool settled = cur_dev - v < kObjectiveTol * (1.0 + cur_dev);
    if (v < cur_dev) {
      cur_a = a;
      cur_b = b;
      cur_dev = v;
    }
    if (settled) break;
  }
  return FitResult{cur_a / r1, cur_b / r2, cur_dev};
}

}  // namespace

FitResult chebyshev_fit_power(const UnitIntervalFunction& f, const Alpha& alpha,
                              const std::vector<double>& x_grid) {
  if (x_grid.size() < 200) {
    throw Error(ErrorKind::InvalidArgument, "power fit needs a grid of at least 200 points");
  }
  const double a = alpha.value();
  if (std::fabs(a) <= 0.01 || std::fabs(a - 1.0) <= 1e-6) {
    throw Error(ErrorKind::DegenerateBasis,
                "power basis degenerates near alpha = 0 and alpha = 1 (alpha = " +
                    std::to_string(a) + ")");
  }
  Basis basis;
  basis.f.reserve(x_grid.size());
  basis.phi1.reserve(x_grid.size());
  basis.phi2.reserve(x_grid.size());
  for (double x : x_grid) {
    basis.f.push_back(f.eval(x));
    basis.phi1.push_back(std::pow(x, a));
    basis.phi2.push_back(std::pow(1.0 - x, a) - 1.0);
  }
  return fit_two_parameter(basis, false);
}

FitResult chebyshev_fit_log(const UnitIntervalFunction& f, const std::vector<double>& x_grid) {
  if (x_grid.size() < 200) {
    throw Error(ErrorKind::InvalidArgument, "log fit needs a grid of at least 200 points");
  }
  Basis basis;
  basis.f.reserve(x_grid.size());
  basis.phi1.reserve(x_grid.size());
  basis.phi2.reserve(x_grid.size());
  for (double x : x_grid) {
    basis.f.push_back(f.eval(x));
    basis.phi1.push_back(std::log(1.0 - x));
    basis.phi2.push_back(1.0);
  }
  return fit_two_parameter(basis, true);
}

std::vector<double> uniform_grid(double margin, int n) {
  if (n < 200 || !(margin > 0.0 && margin < 0.5)) {
    throw Error(ErrorKind::InvalidArgument, "fitting grid needs n >= 200, margin in (0, 0.5)");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] =
        margin + (1.0 - 2.0 * margin) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

ResidualTable brute_force_residual_table(const UnitIntervalFunction& f, const Alpha& alpha, int k,
                                         double margin) {
  if (k < 2 || k > 200) {
    throw Error(ErrorKind::InvalidArgument, "residual table density must lie in [2, 200]");
  }
  if (!(margin > 0.0 && margin < 0.25)) {
    throw Error(ErrorKind::InvalidArgument, "residual table margin must lie in (0, 0.25)");
  }
  ResidualTable table;
  table.k = k;
  table.margin = margin;
  table.xs.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    table.xs[static_cast<std::size_t>(i)] =
        margin + (1.0 - 2.0 * margin) * static_cast<double>(i) / static_cast<double>(k - 1);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  table.r.assign(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(k), nan));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double x = table.xs[static_cast<std::size_t>(i)];
      const double y = table.xs[static_cast<std::size_t>(j)];
      if (x + y > 1.0 - margin) continue;
      const double r = equation::residual(f, alpha, x, y);
      table.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r;
      table.max_abs = std::max(table.max_abs, std::fabs(r));
    }
  }
  return table;
}

}  // namespace infostab::oracle
