#include "infostab/sampler.hpp"

#include <cmath>
#include <string>

#include "infostab/noise.hpp"

namespace infostab {

namespace detail {

double radical_inverse(std::uint64_t i, std::uint32_t base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace detail

namespace {

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  return detail::mix64(state);
}

double unit_draw(std::uint64_t& state) {
  return static_cast<double>(splitmix_next(state) >> 11) * 0x1.0p-53;
}

}  // namespace

OpenTriangleSampler::OpenTriangleSampler(long count, double margin, std::uint64_t seed,
                                         SampleScheme scheme)
    : count_(count), margin_(margin), seed_(seed), scheme_(scheme) {
  if (count < 1) {
    throw Error(ErrorKind::InvalidArgument, "sampler count must be positive");
  }
  if (!(margin > 0.0 && margin < 0.25)) {
    throw Error(ErrorKind::InvalidArgument, "sampler margin must lie in (0, 0.25)");
  }
}

std::vector<std::pair<double, double>> OpenTriangleSampler::samples() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(count_));
  const double m = margin_;

  if (scheme_ == SampleScheme::UniformRejection) {
    std::uint64_t state = detail::mix64(seed_ ^ 0x7f4a7c15ULL);
    while (out.size() < static_cast<std::size_t>(count_)) {
      const double x = m + (1.0 - 2.0 * m) * unit_draw(state);
      const double y = m + (1.0 - 2.0 * m) * unit_draw(state);
      if (x + y <= 1.0 - m) out.emplace_back(x, y);
    }
    return out;
  }

  // Halton scheme: half the budget covers the bulk through the folded
  // square-to-triangle map; a quarter each refines the corners (1,0) and
  // (0,1) with depth t = 1-x (resp. 1-y) log-spaced in [2m, 1/3]. Each
  // stratum advances its own Halton counter: stratifying a single counter by
  // index residue would pin the leading radical-inverse digits per stratum.
  const std::uint64_t offset = 1 + (detail::mix64(seed_) & 0xfffffULL);
  const double depth_lo = 2.0 * m;
  const double depth_hi = 1.0 / 3.0;
  const double depth_ratio = depth_hi / depth_lo;
  std::uint64_t counters[3] = {0, 0, 0};
  for (std::uint64_t i = 0; out.size() < static_cast<std::size_t>(count_); ++i) {
    const int stratum = static_cast<int>(i % 4);
    const std::size_t lane = stratum <= 1 ? 0 : (stratum == 2 ? 1 : 2);
    const std::uint64_t j = offset + counters[lane]++;
    double u1 = detail::radical_inverse(j, 2);
    double u2 = detail::radical_inverse(j, 3);
    double x, y;
    if (lane == 0) {
      if (u1 + u2 > 1.0) {
        u1 = 1.0 - u1;
        u2 = 1.0 - u2;
      }
      x = m + u1 * (1.0 - 3.0 * m);
      y = m + u2 * (1.0 - 3.0 * m);
    } else {
      const double t = depth_lo * std::pow(depth_ratio, u1);
      if (lane == 1) {
        x = 1.0 - t;
        y = m + u2 * (t - 2.0 * m);
      } else {
        y = 1.0 - t;
        x = m + u2 * (t - 2.0 * m);
      }
    }
    if (x >= m && y >= m && x + y <= 1.0 - m) out.emplace_back(x, y);
  }
  return out;
}

const char* sample_scheme_name(SampleScheme scheme) {
  return scheme == SampleScheme::HaltonQuasiRandom ? "halton" : "uniform";
}

SampleScheme parse_sample_scheme(const std::string& name) {
  if (name == "halton") return SampleScheme::HaltonQuasiRandom;
  if (name == "uniform") return SampleScheme::UniformRejection;
  throw Error(ErrorKind::ParseError, "unknown sample scheme '" + name + "' (expected halton|uniform)");
}

}  // namespace infostab
