#pragma once

#include <cstddef>
#include <vector>

namespace gbu {

/// Uniformly spaced closed interval [min, max] with `points` samples.
/// A single point samples `min` only.
struct UniformGrid {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;

  /// Builds the grid whose spacing is `step` (rounded to the nearest whole
  /// number of intervals).
  static UniformGrid from_step(double min, double max, double step);

  void validate() const;
  double step() const;
  double at(std::size_t i) const;
  std::vector<double> samples() const;
};

}  // namespace gbu
