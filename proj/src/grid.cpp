#include "gbu/grid.hpp"

#include <cmath>

#include "gbu/errors.hpp"

namespace gbu {

UniformGrid UniformGrid::from_step(double min, double max, double step) {
  if (!(step > 0.0) || !std::isfinite(step) || !(max > min)) {
    throw InvalidGrid("grid needs max > min and a positive finite step");
  }
  const auto intervals = static_cast<std::size_t>(std::llround((max - min) / step));
  UniformGrid g{min, max, intervals + 1};
  g.validate();
  return g;
}

void UniformGrid::validate() const {
  if (points == 0) throw InvalidGrid("grid has no points");
  if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidGrid("grid bounds must be finite");
  if (points > 1 && !(max > min)) throw InvalidGrid("grid needs max > min");
}

double UniformGrid::step() const {
  return points > 1 ? (max - min) / static_cast<double>(points - 1) : 0.0;
}

double UniformGrid::at(std::size_t i) const {
  if (i + 1 == points && points > 1) return max;
  return min + static_cast<double>(i) * step();
}

std::vector<double> UniformGrid::samples() const {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) out[i] = at(i);
  return out;
}

}  // namespace gbu
