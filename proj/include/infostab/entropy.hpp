#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "infostab/canonical.hpp"
#include "infostab/function.hpp"
#include "infostab/probability.hpp"

namespace infostab::entropy {

/// Shannon entropy in bits: -sum p_i log2 p_i.
double shannon(const ProbabilityVector& p);

/// Entropy of degree alpha: (2^(1-a) - 1)^-1 (sum p_i^a - 1), alpha != 1.
/// Tends to the Shannon entropy as alpha -> 1.
double degree_alpha(const ProbabilityVector& p, const Alpha& alpha);

/// The two-symbol measure I2, represented as the function f(x) = I2(1-x, x).
/// Generates I_n by the recursion
///   I_n(p1..pn) = I_{n-1}(p1+p2, p3..pn) + (p1+p2)^a I2(p1/(p1+p2), p2/(p1+p2)),
/// merging the first two components at every step.
double recursive_build(const UnitIntervalFunction& i2, const Alpha& alpha,
                       const ProbabilityVector& p);

/// Max |I3(p1,p2,p3) - I3(p1,p3,p2)| over the given triples.
double semi_symmetry_defect(const std::function<double(const ProbabilityVector&)>& i3,
                            const std::vector<ProbabilityVector>& triples);

/// A measure system: generator i2 (as f), exponent, and the slack sequence
/// (eps_1 bounds the semi-symmetry defect of I3, eps_{n-1} the n-th recursion
/// defect for n >= 3).
struct MeasureSystem {
  UnitIntervalFunction i2;
  Alpha alpha;
  std::vector<double> slack;
};

/// f(x) = I2(1-x, x); the system's residual level is governed by 2*eps_2 + eps_1.
const UnitIntervalFunction& reduce_to_f(const MeasureSystem& system);

/// Measures slack for a generated system over seeded simplex samples:
/// slack[0] = semi-symmetry sup on sampled triples, slack[n-2] (n >= 3) the
/// sampled recursion defect (identically zero for recursion-generated I_n).
std::vector<double> measure_slack(const MeasureSystem& system, int n_max, std::uint64_t seed,
                                  int samples_per_n);

struct SystemRow {
  int n = 0;
  double max_deviation = 0.0;        // max over samples of |I_n - J_n|
  double bound_at_max = 0.0;         // right-hand side at the worst sample
  double max_utilization = 0.0;      // max over samples of deviation / bound
  bool pass = false;
  long samples = 0;
};

struct SystemReport {
  double alpha = 0.0;
  double eps_combined = 0.0;         // 2*eps_2 + eps_1
  std::vector<double> slack;
  std::vector<SystemRow> rows;       // n = 3 .. n_max
  bool pass = false;
  // Comparison target: c*H^a_n + d*(p1^a - 1) for alpha != 0 (c = (2^(1-a)-1) a,
  // d = b - a), c*H^0_n + lambda*ln p1 for alpha = 0.
  std::string candidate_form;
};

/// Certifies |I_n - J_n| against the per-case bounds for n = 3..n_max over
/// seeded simplex samples; the alpha < 0 bound carries its sample-dependent
/// factor 1 + sum_{k=2}^{n-1} sum_{i<=k} p_i^alpha and is checked per sample.
SystemReport system_certificate(const MeasureSystem& system, int n_max, std::uint64_t seed,
                                int samples_per_n);

}  // namespace infostab::entropy
