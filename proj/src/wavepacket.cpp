#include "gbu/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbu/errors.hpp"
#include "gbu/kernels.hpp"
#include "gbu/series.hpp"

namespace gbu {

namespace {

constexpr double kInvPiQuarter = 0.75112554446494248286;  // pi^{-1/4}

}  // namespace

void GridSpec::validate() const {
  if (x_steps < 1 || t_steps < 1) throw InvalidGrid("grid steps must be >= 1");
  if (!(x_min < x_max)) throw InvalidGrid("grid needs x_min < x_max");
  if (!(t_min <= t_max)) throw InvalidGrid("grid needs t_min <= t_max");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(t_min) ||
      !std::isfinite(t_max)) {
    throw InvalidGrid("grid bounds must be finite");
  }
}

UniformGrid GridSpec::x_axis() const { return {x_min, x_max, x_steps}; }
UniformGrid GridSpec::t_axis() const { return {t_min, t_max, t_steps}; }

double hermite_function(int n, double x) {
  if (n < 0) throw std::domain_error("Hermite function order must be >= 0");
  double prev = 0.0;
  double cur = kInvPiQuarter * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_functions(int n, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  kernels::hermite_row(n, xs, out);
  return out;
}

FockWavePacket::FockWavePacket(LadderIndex j, cplx z)
    : j_(j), z_(z), spec_(CoherentSpec::automatic(j, z * z * z)) {}

FockVector FockWavePacket::state(double t) const {
  // |z(t)>_j is |alpha(t)>_j with alpha(t) = alpha e^{-3it}; the phase
  // e^{-i(j+1/2)t} is global and drops out of every density.
  return build_cs(evolve(spec_, t).evolved);
}

double FockWavePacket::density(double x, double t) const {
  double out = 0.0;
  density_slice(t, std::span<const double>(&x, 1), std::span<double>(&out, 1));
  return out;
}

void FockWavePacket::density_slice(double t, std::span<const double> xs, std::span<double> out) const {
  const FockVector s = state(t);
  const auto& c = s.coeffs();
  kernels::fock_density(std::span<const cplx>(c.data(), static_cast<std::size_t>(c.size())), xs, out);
}

GaussianWavePacket::GaussianWavePacket(LadderIndex j, cplx z) : decomposition_(triangle_decompose(z, j)) {
  // The three packets cancel down to the j-th ladder; when only a sliver of
  // e^{|z|^2} survives, the sum has lost most of its digits.
  if (norm_squared(0.0) < kMinLadderFraction * std::exp(std::norm(z))) {
    throw std::domain_error("Gaussian path is ill-conditioned for this (j, z); use the Fock path");
  }
}

cplx GaussianWavePacket::amplitude(double x, double t) const {
  const cplx rotation = std::polar(1.0, -t);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const cplx zk = decomposition_.labels[k] * rotation;
    sum += decomposition_.weights[k] * std::exp(-0.5 * x * x + M_SQRT2 * zk * x - 0.5 * zk * zk);
  }
  return kInvPiQuarter * sum;
}

double GaussianWavePacket::norm_squared(double t) const {
  const cplx rotation = std::polar(1.0, -t);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const cplx zk = decomposition_.labels[k] * rotation;
    for (std::size_t l = 0; l < 3; ++l) {
      const cplx zl = decomposition_.labels[l] * rotation;
      sum += std::conj(decomposition_.weights[k]) * decomposition_.weights[l] *
             std::exp(std::conj(zk) * zl);
    }
  }
  return sum.real();
}

double GaussianWavePacket::density(double x, double t) const {
  return std::norm(amplitude(x, t)) / norm_squared(t);
}

void GaussianWavePacket::density_slice(double t, std::span<const double> xs, std::span<double> out) const {
  if (out.size() != xs.size()) throw ShapeMismatch("density_slice: output size differs from input");
  const double inv_norm = 1.0 / norm_squared(t);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::norm(amplitude(xs[i], t)) * inv_norm;
}

double DensityField::slice_integral(std::size_t t_index) const {
  const auto s = slice(t_index);
  const double h = grid.x_axis().step();
  CompensatedSum acc;
  for (std::size_t i = 1; i < s.size(); ++i) acc += 0.5 * h * (s[i] + s[i - 1]);
  return acc.value();
}

namespace {

template <typename Packet>
DensityField fill(const Packet& packet, const GridSpec& grid) {
  grid.validate();
  DensityField field{grid, std::vector<double>(grid.x_steps * grid.t_steps)};
  const auto xs = grid.x_axis().samples();
  const auto ts = grid.t_axis();
  for (std::size_t k = 0; k < grid.t_steps; ++k) {
    packet.density_slice(ts.at(k), xs,
                         std::span<double>(field.values).subspan(k * grid.x_steps, grid.x_steps));
  }
  return field;
}

}  // namespace

DensityField density_fock(LadderIndex j, cplx z, const GridSpec& grid) {
  return fill(FockWavePacket(j, z), grid);
}

DensityField density_gaussian(LadderIndex j, cplx z, const GridSpec& grid) {
  return fill(GaussianWavePacket(j, z), grid);
}

double period_check(LadderIndex j, cplx z, const GridSpec& grid, double period) {
  grid.validate();
  const GaussianWavePacket packet(j, z);
  const auto xs = grid.x_axis().samples();
  const auto ts = grid.t_axis();
  std::vector<double> now(xs.size());
  std::vector<double> later(xs.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.t_steps; ++k) {
    const double t = ts.at(k);
    packet.density_slice(t, xs, now);
    packet.density_slice(t + period, xs, later);
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(later[i] - now[i]));
  }
  return worst;
}

}  // namespace gbu
