#pragma once

#include "infostab/error.hpp"

namespace infostab {

enum class AlphaClass { Negative, Zero, PositiveNotOne };

/// Exponent parameter of the equation family. The value 1 is excluded by a
/// configurable guard band: all stability constants diverge as the exponent
/// approaches 1, so certification near it is meaningless.
class Alpha {
 public:
  static constexpr double kDefaultGuard = 1e-3;
  static constexpr double kDefaultZeroTol = 1e-12;

  explicit Alpha(double value, double guard = kDefaultGuard, double zero_tol = kDefaultZeroTol);

  double value() const { return value_; }
  AlphaClass cls() const { return class_; }
  bool is_zero() const { return class_ == AlphaClass::Zero; }
  bool is_negative() const { return class_ == AlphaClass::Negative; }
  bool is_positive() const { return class_ == AlphaClass::PositiveNotOne; }

 private:
  double value_;
  AlphaClass class_;
};

}  // namespace infostab
