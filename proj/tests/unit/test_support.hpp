#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "massprec/grid.hpp"

namespace massprec::testing {

inline GridVector random_vector(const GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(spec.size());
  for (double& x : v) x = dist(engine);
  return GridVector(spec, std::move(v));
}

/// max |a - b| / max |b|
inline double relative_error(std::span<const double> a, std::span<const double> b) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace massprec::testing
