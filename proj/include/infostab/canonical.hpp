#pragma once

#include <variant>

#include "infostab/alpha.hpp"
#include "infostab/function.hpp"

namespace infostab {

/// Candidate solution family on the open interval. Power applies when
/// alpha != 0, LogPlusConst when alpha = 0.
struct PowerCandidate {
  double a = 0.0;
  double b = 0.0;
};

struct LogPlusConstCandidate {
  double lambda = 0.0;
  double c = 0.0;
};

class CanonicalSolution {
 public:
  CanonicalSolution(PowerCandidate p) : node_(p) {}
  CanonicalSolution(LogPlusConstCandidate l) : node_(l) {}

  bool is_power() const { return std::holds_alternative<PowerCandidate>(node_); }
  const PowerCandidate& power() const;
  const LogPlusConstCandidate& log_plus_const() const;

  /// Checks the candidate matches alpha's case (throws CaseMismatch).
  void require_matches(const Alpha& alpha) const;

  double eval(double x, const Alpha& alpha) const;

  /// The candidate as a function value, for deviation scans.
  UnitIntervalFunction as_function(const Alpha& alpha) const;

 private:
  std::variant<PowerCandidate, LogPlusConstCandidate> node_;
};

/// Candidate extended to the closed interval [0,1].
/// H1 (alpha != 0): 0 at x=0, a*x^a + b*(1-x)^a - b inside, a-b at x=1.
/// H2 (alpha  = 0): f(0) at x=0, the constant c inside, f(1) at x=1.
struct H1Solution {
  double a = 0.0;
  double b = 0.0;
  Alpha alpha;
  H1Solution(double a_, double b_, Alpha alpha_) : a(a_), b(b_), alpha(alpha_) {}
};

struct H2Solution {
  double c = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;
};

class ClosedSolution {
 public:
  ClosedSolution(H1Solution h) : node_(h) {}
  ClosedSolution(H2Solution h) : node_(h) {}

  bool is_h1() const { return std::holds_alternative<H1Solution>(node_); }
  const H1Solution& h1() const;
  const H2Solution& h2() const;

  double eval(double x) const;  // x in [0,1]

 private:
  std::variant<H1Solution, H2Solution> node_;
};

/// Function on [0,1]: an interior function plus explicit endpoint values.
struct ClosedFunction {
  UnitIntervalFunction interior;
  double f0 = 0.0;
  double f1 = 0.0;

  double eval(double x) const {
    if (x == 0.0) return f0;
    if (x == 1.0) return f1;
    return interior.eval(x);
  }
};

}  // namespace infostab
