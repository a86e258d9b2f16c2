#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gbu/errors.hpp"
#include "gbu/wavepacket.hpp"

using namespace gbu;

namespace {

using std::numbers::pi;

const double kInvSqrtPi = 1.0 / std::sqrt(pi);

double max_abs_diff(const DensityField& a, const DensityField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

GridSpec small_grid() {
  GridSpec g;
  g.x_steps = 161;
  g.t_steps = 13;
  return g;
}

}  // namespace

TEST_CASE("hermite functions: closed forms") {
  CHECK(hermite_function(0, 0.0) == doctest::Approx(std::pow(pi, -0.25)).epsilon(1e-15));
  CHECK(hermite_function(1, 0.0) == 0.0);
  for (double x : {-2.5, -0.3, 0.0, 0.7, 3.1}) {
    const double g = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    CHECK(hermite_function(1, x) == doctest::Approx(g * std::sqrt(2.0) * x).epsilon(1e-14));
    CHECK(hermite_function(2, x) == doctest::Approx(g * (4 * x * x - 2) / std::sqrt(8.0)).epsilon(1e-13));
    CHECK(hermite_function(3, x) ==
          doctest::Approx(g * (8 * x * x * x - 12 * x) / std::sqrt(48.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(hermite_function(-1, 0.0), std::domain_error);
  const std::vector<double> xs{0.0};
  CHECK_THROWS_AS(hermite_functions(-1, xs), std::domain_error);
}

TEST_CASE("hermite functions: normalization and orthogonality") {
  const auto grid = UniformGrid::from_step(-15.0, 15.0, 1e-3);
  const auto xs = grid.samples();
  const auto p7 = hermite_functions(7, xs);
  const auto p5 = hermite_functions(5, xs);
  double norm = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    norm += p7[i] * p7[i];
    cross += p7[i] * p5[i];
  }
  CHECK(std::abs(norm * grid.step() - 1.0) < 1e-8);
  CHECK(std::abs(cross * grid.step()) < 1e-8);
}

TEST_CASE("hermite functions stay finite for large orders") {
  const auto xs = UniformGrid{-20.0, 20.0, 801}.samples();
  for (int n : {0, 50, 200, 500}) {
    const auto row = hermite_functions(n, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::isfinite(row[i]));
      // |psi_n| <= pi^{-1/4} (Cramer's bound)
      CHECK(std::abs(row[i]) <= 0.7511255444649425);
      CHECK(row[i] == doctest::Approx(hermite_function(n, xs[i])).epsilon(1e-12).scale(1e-300));
    }
  }
}

TEST_CASE("stationary densities") {
  const GridSpec grid = small_grid();
  const auto f0 = density_fock(LadderIndex(0), 0.0, grid);
  const auto g0 = density_gaussian(LadderIndex(0), 0.0, grid);
  const auto f1 = density_fock(LadderIndex(1), 0.0, grid);
  const auto xs = grid.x_axis().samples();
  for (std::size_t k = 0; k < grid.t_steps; ++k) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double vac = kInvSqrtPi * std::exp(-xs[i] * xs[i]);
      CHECK(std::abs(f0.at(k, i) - vac) < 1e-15);
      CHECK(std::abs(g0.at(k, i) - vac) < 1e-15);
      const double p1 = hermite_function(1, xs[i]);
      CHECK(std::abs(f1.at(k, i) - p1 * p1) < 1e-15);
    }
  }
}

TEST_CASE("Gaussian path refuses ill-conditioned labels") {
  CHECK_THROWS_AS(GaussianWavePacket(LadderIndex(1), 0.0), std::domain_error);
  CHECK_THROWS_AS(GaussianWavePacket(LadderIndex(2), 1e-4), std::domain_error);
  CHECK_NOTHROW(GaussianWavePacket(LadderIndex(2), 0.1));
  CHECK_NOTHROW(GaussianWavePacket(LadderIndex(0), 0.0));
}

TEST_CASE("dual-path agreement") {
  const GridSpec grid = small_grid();
  for (const auto j : kAllLadders) {
    for (cplx z : {cplx(1.0), cplx(2.0), cplx(2.5), cplx(-1.1, 1.7), cplx(0.3, -2.9)}) {
      CAPTURE(j.value());
      CAPTURE(z);
      CHECK(max_abs_diff(density_fock(j, z, grid), density_gaussian(j, z, grid)) < 1e-8);
    }
  }
}

TEST_CASE("densities are normalized and non-negative") {
  const GridSpec grid = small_grid();
  for (const auto j : kAllLadders) {
    for (cplx z : {cplx(1.0), cplx(2.5), cplx(-2.0, 2.0)}) {
      const auto field = density_gaussian(j, z, grid);
      for (std::size_t k = 0; k < grid.t_steps; ++k) CHECK(std::abs(field.slice_integral(k) - 1.0) < 1e-6);
      for (double v : field.values) CHECK(v >= 0.0);
    }
  }
}

TEST_CASE("period 2 pi / 3") {
  GridSpec grid = small_grid();
  for (const auto j : kAllLadders) {
    CHECK(period_check(j, 2.0, grid) < 1e-10);
    CHECK(period_check(j, cplx(1.2, -0.7), grid) < 1e-10);
  }
  CHECK(period_check(LadderIndex(0), 2.0, grid, 2 * pi / 6) > 1e-3);
  // the Fock path sees the same period
  grid.t_max = kDeformedPeriod;
  grid.t_steps = 2;
  const auto f = density_fock(LadderIndex(1), 2.0, grid);
  for (std::size_t i = 0; i < grid.x_steps; ++i) CHECK(std::abs(f.at(0, i) - f.at(1, i)) < 1e-10);
}

TEST_CASE("time translation rotates the label") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const LadderIndex j(trial % 3);
    const cplx z(u(rng), u(rng));
    const double s = u(rng);
    const FockWavePacket a(j, z);
    const FockWavePacket b(j, z * std::polar(1.0, -s));
    for (int p = 0; p < 10; ++p) {
      const double x = 3 * u(rng);
      const double t = u(rng);
      CHECK(std::abs(a.density(x, t + s) - b.density(x, t)) < 1e-10);
    }
  }
}

TEST_CASE("half-period parity and time reversal") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto j : kAllLadders) {
    const GaussianWavePacket complex_label(j, cplx(1.3, -0.8));
    const GaussianWavePacket real_label(j, 1.7);
    for (int p = 0; p < 50; ++p) {
      const double x = 3 * u(rng);
      const double t = u(rng);
      CHECK(std::abs(complex_label.density(x, t + pi / 3) - complex_label.density(-x, t)) < 1e-12);
      CHECK(std::abs(real_label.density(x, t) - real_label.density(x, -t)) < 1e-12);
    }
  }
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.x_steps = 0;
  CHECK_THROWS_AS(density_gaussian(LadderIndex(0), 1.0, g), InvalidGrid);
  g = GridSpec{};
  g.x_min = 1.0;
  g.x_max = -1.0;
  CHECK_THROWS_AS(density_fock(LadderIndex(0), 1.0, g), InvalidGrid);
  g = GridSpec{};
  g.t_max = NAN;
  CHECK_THROWS_AS(period_check(LadderIndex(0), 1.0, g), InvalidGrid);
}
