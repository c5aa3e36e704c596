#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "infostab/alpha.hpp"
#include "infostab/noise.hpp"

namespace infostab {

class UnitIntervalFunction;

/// x |-> a*x^alpha + b*(1-x)^alpha - b
struct PowerForm {
  double a = 0.0;
  double b = 0.0;
  Alpha alpha;
  PowerForm(double a_, double b_, Alpha alpha_) : a(a_), b(b_), alpha(alpha_) {}
};

/// x |-> lambda*ln(1-x) + c
struct LogForm {
  double lambda = 0.0;
  double c = 0.0;
};

/// Linear interpolation through samples on a strictly increasing grid inside
/// (0,1). Evaluation outside the tabulated hull is an error, never an
/// extrapolation.
struct Tabulated {
  std::vector<double> grid;
  std::vector<double> values;
};

struct Perturbed {
  std::shared_ptr<const UnitIntervalFunction> base;
  PerturbationSpec noise;
};

/// Immutable real-valued function on the open interval (0,1).
class UnitIntervalFunction {
 public:
  UnitIntervalFunction(PowerForm form);
  UnitIntervalFunction(LogForm form);
  UnitIntervalFunction(Tabulated table);

  static UnitIntervalFunction power(double a, double b, Alpha alpha);
  static UnitIntervalFunction log(double lambda, double c);
  static UnitIntervalFunction tabulated(std::vector<double> grid, std::vector<double> values);
  static UnitIntervalFunction perturbed(UnitIntervalFunction base, PerturbationSpec noise);

  /// Evaluate at x in (0,1). Throws OutOfDomain outside the open interval,
  /// TabulatedExtrapolation outside a tabulated hull, NonFiniteValue on
  /// overflow (possible for negative exponents near the boundary).
  double eval(double x) const;

  double operator()(double x) const { return eval(x); }

  bool is_power() const;
  bool is_log() const;
  bool is_perturbed() const;
  const PowerForm* as_power() const;
  const LogForm* as_log() const;
  const Tabulated* as_tabulated() const;
  const Perturbed* as_perturbed() const;

 private:
  using Node = std::variant<PowerForm, LogForm, Tabulated, Perturbed>;
  explicit UnitIntervalFunction(Node node);

  std::shared_ptr<const Node> node_;
};

/// CSV exchange format for tabulated samples: header "x,value", one sample per
/// row, '.' decimal separator.
Tabulated load_tabulated_csv(const std::string& path);
void store_tabulated_csv(const Tabulated& table, const std::string& path);

/// Samples any function on a uniform grid of n points over [lo, hi].
Tabulated tabulate(const UnitIntervalFunction& f, double lo, double hi, int n);

}  // namespace infostab
