#pragma once

#include <stdexcept>
#include <string>

namespace infostab {

enum class ErrorKind {
  OutOfDomain,
  TabulatedExtrapolation,
  NonFiniteValue,
  AlphaNearOne,
  TAlphaUndefined,
  ZeroAlphaHasNoC,
  DegenerateGrid,
  DegenerateBasis,
  CaseMismatch,
  InsufficientSlackSequence,
  InvalidArgument,
  IoError,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace infostab
