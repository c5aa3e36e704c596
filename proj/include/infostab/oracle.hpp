#pragma once

#include <vector>

#include "infostab/alpha.hpp"
#include "infostab/function.hpp"

namespace infostab::oracle {

// Independent brute-force fitters used to validate the constructive
// extraction. Nothing here may call into the stability module.

struct FitResult {
  double a = 0.0;       // coefficient of the first basis function
  double b = 0.0;       // coefficient of the second
  double dev = 0.0;     // achieved minimax deviation over the grid
};

/// Minimizes max over the grid of |f(x) - (a x^alpha + b ((1-x)^alpha - 1))|
/// by a coarse parameter grid followed by nested golden-section refinement
/// (the partial minimum over either coordinate is unimodal). Needs
/// |alpha| > 0.01 and alpha != 1: the basis degenerates at both points.
FitResult chebyshev_fit_power(const UnitIntervalFunction& f, const Alpha& alpha,
                              const std::vector<double>& x_grid);

/// Same scheme over the basis {ln(1-x), 1}; the inner minimum over the
/// constant is the exact midrange.
FitResult chebyshev_fit_log(const UnitIntervalFunction& f, const std::vector<double>& x_grid);

/// Uniform fitting grid of n >= 200 points over [margin, 1-margin].
std::vector<double> uniform_grid(double margin, int n);

struct ResidualTable {
  int k = 0;
  double margin = 0.0;
  std::vector<double> xs;              // grid abscissae (shared by rows/cols)
  std::vector<std::vector<double>> r;  // r[i][j] = residual(x_i, y_j), NaN off-triangle
  double max_abs = 0.0;
};

/// Exhaustive residual over the regular k x k margin-clipped grid (k <= 200);
/// cross-checks sampled sup estimates.
ResidualTable brute_force_residual_table(const UnitIntervalFunction& f, const Alpha& alpha, int k,
                                         double margin);

}  // namespace infostab::oracle
