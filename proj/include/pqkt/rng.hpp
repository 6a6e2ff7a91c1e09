#pragma once

#include <cstdint>
#include <vector>

#include "pqkt/poly.hpp"

namespace pqkt {

/// splitmix64; hand-rolled so streams are identical across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [lo, hi)
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

/// K points in the cube [-radius, radius]^dim, deterministic in seed.
inline std::vector<ChartPoint> sample_points(int dim, int count, std::uint64_t seed,
                                             double radius = 0.5) {
  Rng rng(seed);
  std::vector<ChartPoint> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k) {
    ChartPoint p;
    p.coords.resize(dim);
    for (int i = 0; i < dim; ++i) p.coords[i] = rng.uniform(-radius, radius);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace pqkt
