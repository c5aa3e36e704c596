#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "infostab/alpha.hpp"
#include "infostab/function.hpp"
#include "infostab/sampler.hpp"

namespace infostab::equation {

/// Pointwise defect of the two-variable equation:
///   f(x) + (1-x)^a f(y/(1-x)) - f(y) - (1-y)^a f(x/(1-y))
/// Zero on solutions; antisymmetric in (x, y); exactly zero on the diagonal.
double residual(const UnitIntervalFunction& f, const Alpha& alpha, double x, double y);

struct ResidualReport {
  double eps_hat = 0.0;    // max |residual| over the samples
  double argmax_x = 0.0;   // a witnessing pair
  double argmax_y = 0.0;
  double p99 = 0.0;        // 99th percentile of |residual| (diagnostic)
  long samples = 0;
};

/// Sampled sup of |residual| over the open triangle. The reduction is
/// order-insensitive; a NaN anywhere aborts with NonFiniteValue instead of
/// polluting the max.
ResidualReport sup_residual(const UnitIntervalFunction& f, const Alpha& alpha,
                            const OpenTriangleSampler& sampler);

/// Defect testers for the helper equations on pair sets supplied by the
/// caller. Each pair (and its combination x+y resp. x*y) must lie in [lo, hi].
double additive_defect(const std::function<double(double)>& a,
                       const std::vector<std::pair<double, double>>& pairs, double lo, double hi);
double multiplicative_defect(const std::function<double(double)>& mu,
                             const std::vector<std::pair<double, double>>& pairs, double lo,
                             double hi);
double logarithmic_defect(const std::function<double(double)>& l,
                          const std::vector<std::pair<double, double>>& pairs, double lo,
                          double hi);

}  // namespace infostab::equation
