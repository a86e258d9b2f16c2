#pragma once

// Position-space densities rho_j(x, t) of the evolving deformed coherent
// states, evaluated two independent ways: a Fock sum over Hermite functions
// and a closed-form superposition of three Gaussian packets.

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "gbu/coherent.hpp"
#include "gbu/grid.hpp"

namespace gbu {

inline constexpr double kDeformedPeriod = 2.0 * std::numbers::pi / 3.0;

/// Smallest share of e^{|z|^2} the j-th ladder may carry before the Gaussian
/// superposition is refused (about six digits lost to cancellation).
inline constexpr double kMinLadderFraction = 1e-6;

struct GridSpec {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t x_steps = 401;
  double t_min = 0.0;
  double t_max = 2.0 * std::numbers::pi;
  std::size_t t_steps = 241;

  void validate() const;
  UniformGrid x_axis() const;
  UniformGrid t_axis() const;
};

/// psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}, by the normalized
/// three-term recurrence. Throws std::domain_error for n < 0.
double hermite_function(int n, double x);

/// psi_n at every x, through the dispatched kernel.
std::vector<double> hermite_functions(int n, std::span<const double> xs);

/// Density of |z(t)>_j from Fock coefficients of the normalized evolved state.
class FockWavePacket {
 public:
  FockWavePacket(LadderIndex j, cplx z);

  LadderIndex ladder() const noexcept { return j_; }
  cplx z() const noexcept { return z_; }
  std::size_t truncation() const noexcept { return spec_.truncation; }

  /// Normalized Fock coefficients at time t (global phase dropped).
  FockVector state(double t) const;
  double density(double x, double t) const;
  void density_slice(double t, std::span<const double> xs, std::span<double> out) const;

 private:
  LadderIndex j_;
  cplx z_;
  CoherentSpec spec_;
};

/// Same density from the triangle superposition of standard coherent states:
/// <x|z> = pi^{-1/4} exp(-x^2/2 + sqrt2 z x - z^2/2), labels z_k e^{-it}.
/// Throws std::domain_error when |z|_j carries less than kMinLadderFraction
/// of e^{|z|^2}, which includes z = 0 for j > 0.
class GaussianWavePacket {
 public:
  GaussianWavePacket(LadderIndex j, cplx z);

  /// Unnormalized amplitude sum_k c_k <x|z_k(t)>.
  cplx amplitude(double x, double t) const;
  /// <z_j(t)|z_j(t)> from the closed-form overlaps <u|v> = exp(conj(u) v).
  double norm_squared(double t) const;
  double density(double x, double t) const;
  void density_slice(double t, std::span<const double> xs, std::span<double> out) const;

 private:
  TriangleDecomposition decomposition_;
};

struct DensityField {
  GridSpec grid;
  /// Row-major by time: values[k * x_steps + i] = rho(x_i, t_k).
  std::vector<double> values;

  double at(std::size_t t_index, std::size_t x_index) const {
    return values[t_index * grid.x_steps + x_index];
  }
  std::span<const double> slice(std::size_t t_index) const {
    return std::span<const double>(values).subspan(t_index * grid.x_steps, grid.x_steps);
  }
  /// Trapezoid integral over x of one time slice.
  double slice_integral(std::size_t t_index) const;
};

DensityField density_fock(LadderIndex j, cplx z, const GridSpec& grid);
DensityField density_gaussian(LadderIndex j, cplx z, const GridSpec& grid);

/// max over the grid of |rho(x, t + period) - rho(x, t)|, Gaussian path.
double period_check(LadderIndex j, cplx z, const GridSpec& grid, double period = kDeformedPeriod);

}  // namespace gbu
