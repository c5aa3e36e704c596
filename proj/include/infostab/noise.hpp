#pragma once

#include <cstdint>

#include "infostab/error.hpp"

namespace infostab {

enum class NoiseKind { UniformIID, SmoothBump };

/// Sup-norm noise of radius epsilon. The realization is a pure function of
/// (x, kind, epsilon, seed): |delta(x)| <= epsilon always, and identical
/// parameters reproduce the identical noise function.
struct PerturbationSpec {
  double epsilon = 0.0;
  NoiseKind kind = NoiseKind::UniformIID;
  std::uint64_t seed = 0;

  PerturbationSpec() = default;
  PerturbationSpec(double eps, NoiseKind k, std::uint64_t s) : epsilon(eps), kind(k), seed(s) {
    if (!(eps >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "perturbation epsilon must be nonnegative");
    }
  }

  double value(double x) const;
};

namespace detail {

std::uint64_t mix64(std::uint64_t x);

/// Uniform draw in [0, 1) keyed by the bit pattern of x and the seed.
double hash_unit(double x, std::uint64_t seed);

}  // namespace detail

const char* noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string& name);

}  // namespace infostab
