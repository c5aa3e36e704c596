#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "infostab/error.hpp"

namespace infostab {

enum class SampleScheme { UniformRejection, HaltonQuasiRandom };

/// Deterministic sampler of the open triangle {x, y >= margin, x + y <= 1 - margin}.
///
/// Every emitted pair keeps x, y and 1-x-y at least margin away from 0, which
/// also keeps both inner arguments y/(1-x) and x/(1-y) of the equation at
/// least margin away from {0, 1}.
///
/// UniformRejection draws area-uniformly. HaltonQuasiRandom interleaves a
/// low-discrepancy bulk map with log-depth strata hugging the corners (1,0)
/// and (0,1) down to depth 2*margin: the residual field diverges at those
/// corners for negative exponents, and a sup estimate that never approaches
/// them underestimates by orders of magnitude.
class OpenTriangleSampler {
 public:
  OpenTriangleSampler(long count, double margin, std::uint64_t seed,
                      SampleScheme scheme = SampleScheme::HaltonQuasiRandom);

  long count() const { return count_; }
  double margin() const { return margin_; }
  std::uint64_t seed() const { return seed_; }
  SampleScheme scheme() const { return scheme_; }

  /// The full deterministic sample sequence (identical parameters, identical
  /// sequence).
  std::vector<std::pair<double, double>> samples() const;

 private:
  long count_;
  double margin_;
  std::uint64_t seed_;
  SampleScheme scheme_;
};

namespace detail {
/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(std::uint64_t i, std::uint32_t base);
}  // namespace detail

const char* sample_scheme_name(SampleScheme scheme);
SampleScheme parse_sample_scheme(const std::string& name);

}  // namespace infostab
