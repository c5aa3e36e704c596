#include "infostab/canonical.hpp"

#include <cmath>
#include <string>

namespace infostab {

const PowerCandidate& CanonicalSolution::power() const {
  if (const auto* p = std::get_if<PowerCandidate>(&node_)) return *p;
  throw Error(ErrorKind::CaseMismatch, "candidate is not of the power family");
}

const LogPlusConstCandidate& CanonicalSolution::log_plus_const() const {
  if (const auto* l = std::get_if<LogPlusConstCandidate>(&node_)) return *l;
  throw Error(ErrorKind::CaseMismatch, "candidate is not of the log-plus-constant family");
}

void CanonicalSolution::require_matches(const Alpha& alpha) const {
  if (alpha.is_zero() != !is_power()) {
    throw Error(ErrorKind::CaseMismatch,
                std::string("candidate family does not match alpha = ") +
                    std::to_string(alpha.value()) +
                    (is_power() ? " (power requires alpha != 0)" : " (log form requires alpha = 0)"));
  }
}

double CanonicalSolution::eval(double x, const Alpha& alpha) const {
  require_matches(alpha);
  if (is_power()) {
    const auto& p = power();
    const double a = alpha.value();
    return p.a * std::pow(x, a) + p.b * std::pow(1.0 - x, a) - p.b;
  }
  const auto& l = log_plus_const();
  return l.lambda * std::log(1.0 - x) + l.c;
}

UnitIntervalFunction CanonicalSolution::as_function(const Alpha& alpha) const {
  require_matches(alpha);
  if (is_power()) {
    return UnitIntervalFunction::power(power().a, power().b, alpha);
  }
  return UnitIntervalFunction::log(log_plus_const().lambda, log_plus_const().c);
}

const H1Solution& ClosedSolution::h1() const {
  if (const auto* h = std::get_if<H1Solution>(&node_)) return *h;
  throw Error(ErrorKind::CaseMismatch, "closed solution is not of the H1 family");
}

const H2Solution& ClosedSolution::h2() const {
  if (const auto* h = std::get_if<H2Solution>(&node_)) return *h;
  throw Error(ErrorKind::CaseMismatch, "closed solution is not of the H2 family");
}

double ClosedSolution::eval(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "closed solution evaluated outside [0,1]");
  }
  if (is_h1()) {
    const auto& h = h1();
    if (x == 0.0) return 0.0;
    if (x == 1.0) return h.a - h.b;
    const double a = h.alpha.value();
    return h.a * std::pow(x, a) + h.b * std::pow(1.0 - x, a) - h.b;
  }
  const auto& h = h2();
  if (x == 0.0) return h.f0;
  if (x == 1.0) return h.f1;
  return h.c;
}

}  // namespace infostab
