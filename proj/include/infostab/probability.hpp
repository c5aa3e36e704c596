#pragma once

#include <cstdint>
#include <vector>

#include "infostab/error.hpp"

namespace infostab {

/// Element of the open probability simplex: n >= 2 strictly positive
/// components summing to 1 within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> components);

  /// Rescales positive weights to unit sum, then validates.
  static ProbabilityVector normalized(std::vector<double> weights);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& components() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Seeded sampler of the open simplex: normalized exponential draws
/// (symmetric Dirichlet), rejecting vectors with any component below the
/// margin. Identical (n, seed, margin) reproduce the identical sequence.
class SimplexSampler {
 public:
  SimplexSampler(std::size_t n, std::uint64_t seed, double margin = 1e-4);

  ProbabilityVector next();

 private:
  std::size_t n_;
  double margin_;
  std::uint64_t state_;
};

}  // namespace infostab
