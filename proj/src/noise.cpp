#include "infostab/noise.hpp"

#include <bit>
#include <cmath>

namespace infostab {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double hash_unit(double x, std::uint64_t seed) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  const std::uint64_t h = mix64(bits ^ mix64(seed));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace detail

double PerturbationSpec::value(double x) const {
  if (epsilon == 0.0) return 0.0;
  switch (kind) {
    case NoiseKind::UniformIID:
      return epsilon * (2.0 * detail::hash_unit(x, seed) - 1.0);
    case NoiseKind::SmoothBump: {
      // Frequency in [2pi, 8pi] and phase in [0, 2pi), both fixed by the seed.
      const double two_pi = 6.283185307179586476925;
      const double omega = two_pi * (2.0 + 6.0 * detail::hash_unit(1.0, seed ^ 0x5bd1e995ULL));
      const double phase = two_pi * detail::hash_unit(2.0, seed ^ 0xc2b2ae3dULL);
      return epsilon * std::sin(omega * x + phase);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable noise kind");
}

const char* noise_kind_name(NoiseKind kind) {
  return kind == NoiseKind::UniformIID ? "uniform" : "bump";
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "uniform") return NoiseKind::UniformIID;
  if (name == "bump") return NoiseKind::SmoothBump;
  throw Error(ErrorKind::ParseError, "unknown noise kind '" + name + "' (expected uniform|bump)");
}

}  // namespace infostab
