#include "infostab/probability.hpp"

#include <cmath>
#include <string>

#include "infostab/noise.hpp"

namespace infostab {

namespace {
constexpr double kSumTol = 1e-12;

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  return detail::mix64(state);
}

double unit_draw(std::uint64_t& state) {
  return static_cast<double>(splitmix_next(state) >> 11) * 0x1.0p-53;
}
}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> components) : p_(std::move(components)) {
  if (p_.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "probability vector needs n >= 2 components");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "probability vector components must be positive");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kSumTol) {
    throw Error(ErrorKind::InvalidArgument,
                "probability vector sums to " + std::to_string(sum) + ", not 1");
  }
}

ProbabilityVector ProbabilityVector::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double v : weights) sum += v;
  if (!(sum > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "cannot normalize nonpositive weights");
  }
  for (double& v : weights) v /= sum;
  return ProbabilityVector(std::move(weights));
}

SimplexSampler::SimplexSampler(std::size_t n, std::uint64_t seed, double margin)
    : n_(n), margin_(margin), state_(detail::mix64(seed ^ (0xa076'1d64'78bd'642fULL + n))) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "simplex sampler needs n >= 2");
  }
  if (!(margin > 0.0 && margin < 1.0 / static_cast<double>(n))) {
    throw Error(ErrorKind::InvalidArgument, "simplex margin must lie in (0, 1/n)");
  }
}

ProbabilityVector SimplexSampler::next() {
  std::vector<double> w(n_);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double sum = 0.0;
    for (double& v : w) {
      v = -std::log(1.0 - unit_draw(state_));
      sum += v;
    }
    bool ok = sum > 0.0;
    for (double& v : w) {
      v /= sum;
      ok = ok && v >= margin_;
    }
    if (ok) return ProbabilityVector::normalized(std::move(w));
  }
  throw Error(ErrorKind::InvalidArgument, "simplex sampler rejection stalled; margin too large?");
}

}  // namespace infostab
