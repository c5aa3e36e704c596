#include "infostab/constants.hpp"

#include <cmath>
#include <string>

namespace infostab {

double k_alpha(const Alpha& alpha) {
  const double a = alpha.value();
  if (std::fabs(a - 1.0) < 1e-9) {
    throw Error(ErrorKind::AlphaNearOne, "K(alpha) diverges as alpha -> 1");
  }
  switch (alpha.cls()) {
    case AlphaClass::Zero:
      return 63.0;
    case AlphaClass::Negative:
      return (8.0 + 6.0 * std::exp2(a) + std::exp2(-a)) / std::fabs(std::exp2(1.0 - a) - 1.0);
    case AlphaClass::PositiveNotOne:
      return (3.0 + 12.0 * std::exp2(a) +
              32.0 * std::pow(3.0, a + 1.0) / std::fabs(std::exp2(-a) - 1.0)) /
             std::fabs(std::exp2(1.0 - a) - 1.0);
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable alpha class");
}

double t_alpha(const Alpha& alpha) {
  const double a = alpha.value();
  if (alpha.cls() != AlphaClass::PositiveNotOne) {
    throw Error(ErrorKind::TAlphaUndefined,
                "T(alpha) requires alpha > 0, got " + std::to_string(a));
  }
  return 3.0 * std::exp2(a) + 8.0 * std::pow(3.0, a + 1.0) / std::fabs(std::exp2(-a) - 1.0);
}

}  // namespace infostab
