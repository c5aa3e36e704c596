#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infostab/canonical.hpp"
#include "infostab/constants.hpp"
#include "infostab/residual.hpp"

namespace infostab::stability {

enum class Domain { Open, Closed };

/// Outcome of a certification run. The verdict is
///   pass  <=>  sup_deviation <= bound + 1e-9 * (1 + |bound|)
/// with bound = K(alpha) * eps_hat on the open domain and, on the closed
/// domain, max{K(alpha), T(alpha) + 1} * eps_hat when alpha > 0.
struct StabilityCertificate {
  double alpha = 0.0;
  double eps_hat = 0.0;
  double k_alpha = 0.0;
  CanonicalSolution candidate;
  double sup_deviation = 0.0;
  double bound = 0.0;
  bool pass = false;
  long samples = 0;
  double margin = 0.0;
  std::uint64_t seed = 0;
  Domain domain = Domain::Open;
};

struct CertifyOptions {
  int deviation_points = 10000;
  // Deviation grid margin; defaults to the sampler margin.
  std::optional<double> deviation_margin;
};

/// Homogeneous two-variable lift F(u,v) = (u+v)^a f(v/(u+v)), u,v > 0.
double lift_F(const UnitIntervalFunction& f, const Alpha& alpha, double u, double v);

/// Asymmetry defect g(u) = F(u,1) - F(1,u); costs exactly two evaluations of f.
double defect_g(const UnitIntervalFunction& f, const Alpha& alpha, double u);

/// The constant c of the candidate, from two evaluations of f at 1/3 and 2/3:
///   alpha < 0: c = g(2) / (2^a - 1)
///   alpha > 0: c = g(1/2) / (2^-a - 1)
double extract_c(const UnitIntervalFunction& f, const Alpha& alpha);

struct LogFitResult {
  double lambda = 0.0;
  double log_defect = 0.0;  // max |g(uv) - g(u) - g(v)| over in-hull grid pairs
};

/// Least-squares slope of g(u) against ln u through the origin, on a
/// log-spaced grid (default 64 points in [1/8, 8]).
LogFitResult fit_lambda_log(const UnitIntervalFunction& f, const std::vector<double>& u_grid);
std::vector<double> default_log_fit_grid();

/// Constructive candidate:
///   alpha != 0: c as above, f0(x) = f(x) - c[(1-x)^a - 1],
///               a = f0(1/2) / (2^(1-a) - 1), b = a + c
///   alpha  = 0: lambda from the log fit, c = f(1/2) - lambda ln(1/2)
CanonicalSolution extract_candidate(const UnitIntervalFunction& f, const Alpha& alpha);

StabilityCertificate certify_open(const UnitIntervalFunction& f, const Alpha& alpha,
                                  const OpenTriangleSampler& sampler,
                                  const CertifyOptions& options = {});

/// Extends a candidate to [0,1]; the H1 boundary values are forced (0 and
/// a - b), the H2 boundary values are copied from f.
ClosedSolution extend_closed(const CanonicalSolution& candidate, const Alpha& alpha, double f0,
                             double f1);

/// As certify_open, with eps_hat still measured on the interior but the
/// deviation taken over [0,1] including both endpoints.
StabilityCertificate certify_closed(const ClosedFunction& f, const Alpha& alpha,
                                    const OpenTriangleSampler& sampler,
                                    const CertifyOptions& options = {});

struct ProofDiagnostics {
  double f0_equation = 0.0;  // F0(p,q) of the centered function
  double g_symmetry = 0.0;   // |G(u,v) - G(v,u)| at (u,v) = (p,q)
};

/// Proof-internal quantities at one point pair, for bound auditing.
ProofDiagnostics proof_diagnostics(const UnitIntervalFunction& f, const Alpha& alpha, double p,
                                   double q);

/// Sup over a margin-respecting uniform grid of |f - candidate|.
double sup_deviation_open(const UnitIntervalFunction& f, const Alpha& alpha,
                          const CanonicalSolution& candidate, double margin, int points);

const char* domain_name(Domain domain);

}  // namespace infostab::stability
