#include "infostab/alpha.hpp"

#include <cmath>
#include <string>

namespace infostab {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::TabulatedExtrapolation: return "TabulatedExtrapolation";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::AlphaNearOne: return "AlphaNearOne";
    case ErrorKind::TAlphaUndefined: return "TAlphaUndefined";
    case ErrorKind::ZeroAlphaHasNoC: return "ZeroAlphaHasNoC";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::InsufficientSlackSequence: return "InsufficientSlackSequence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Alpha::Alpha(double value, double guard, double zero_tol) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must be finite");
  }
  if (!(guard > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha guard must be positive");
  }
  if (std::fabs(value - 1.0) < guard) {
    throw Error(ErrorKind::AlphaNearOne,
                "alpha = " + std::to_string(value) + " lies inside the guard band around 1 (guard " +
                    std::to_string(guard) + ")");
  }
  value_ = value;
  if (value < -zero_tol) {
    class_ = AlphaClass::Negative;
  } else if (value <= zero_tol) {
    class_ = AlphaClass::Zero;
  } else {
    class_ = AlphaClass::PositiveNotOne;
  }
}

}  // namespace infostab
