#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gbu/coherent.hpp"
#include "gbu/errors.hpp"

using namespace gbu;

namespace {

using std::numbers::pi;

cplx random_alpha(std::mt19937_64& rng, double max_abs) {
  std::uniform_real_distribution<double> r(0.0, max_abs);
  std::uniform_real_distribution<double> phi(-pi, pi);
  return std::polar(r(rng), phi(rng));
}

// z^m / sqrt(m!) straight from pow and tgamma; independent of the recurrences.
cplx direct_coefficient(cplx z, std::size_t m) {
  return std::pow(z, double(m)) / std::sqrt(std::tgamma(double(m) + 1.0));
}

}  // namespace

TEST_CASE("build_cs examples") {
  const auto v0 = build_cs(CoherentSpec::automatic(LadderIndex(0), 0.0));
  CHECK(v0.truncation() == 1);
  CHECK(v0[0] == cplx(1.0));

  const auto v2 = build_cs(CoherentSpec::automatic(LadderIndex(2), 0.0));
  CHECK(v2.truncation() == 3);
  CHECK(v2[2] == cplx(1.0));
  CHECK(std::abs(v2[0]) + std::abs(v2[1]) == 0.0);

  const auto v = build_cs(CoherentSpec::automatic(LadderIndex(0), 1.0));
  CHECK(std::abs(v[3] / v[0] - 1.0 / std::sqrt(6.0)) < 1e-15);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
}

TEST_CASE("build_cs rejects truncations that drop too much norm") {
  const CoherentSpec small{LadderIndex(2), 5.0, 12};
  try {
    (void)build_cs(small);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.given() == 12);
    CHECK(e.minimal() == minimal_truncation(LadderIndex(2), 5.0));
    CHECK_NOTHROW(build_cs({LadderIndex(2), 5.0, e.minimal()}));
  }
}

TEST_CASE("truncation rule") {
  for (const auto j : kAllLadders) {
    for (double r : {0.0, 0.3, 1.0, 2.5, 5.0, 10.0, 15.625}) {
      CAPTURE(j.value());
      CAPTURE(r);
      const auto n = minimal_truncation(j, r);
      CHECK((n - 1) % 3 == std::size_t(j.value()));
      CHECK(relative_tail(j, r, n) < kTailTolerance);
      if (r > 0.0) CHECK(relative_tail(j, r, n - 3) > 0.0);
    }
  }
  CHECK(relative_tail(LadderIndex(2), 1.0, 2) == 1.0);
}

TEST_CASE("eigen residual") {
  CHECK(eigen_residual(CoherentSpec::automatic(LadderIndex(1), 2.0)) < 1e-10);
  CHECK(eigen_residual(CoherentSpec::automatic(LadderIndex(0), 0.0)) == 0.0);
  const double starved = eigen_residual({LadderIndex(2), 5.0, 12});
  CHECK(starved > 1e-6);
}

TEST_CASE("eigenvalue property over random states") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const LadderIndex j(trial % 3);
    const auto spec = CoherentSpec::automatic(j, random_alpha(rng, 5.0));
    CHECK(eigen_residual(spec) < 1e-10);
  }
}

TEST_CASE("a_norm_squared at the origin") {
  CHECK(a_norm_squared(LadderIndex(0), 0.0) == 0.0);
  CHECK(a_norm_squared(LadderIndex(1), 0.0) == 1.0);
  CHECK(a_norm_squared(LadderIndex(2), 0.0) == 2.0);
}

TEST_CASE("statistics") {
  const auto s0 = statistics(CoherentSpec::automatic(LadderIndex(0), 0.0));
  CHECK(s0.uncertainty_product == doctest::Approx(0.5).epsilon(1e-14));
  const auto s1 = statistics(CoherentSpec::automatic(LadderIndex(1), 0.0));
  CHECK(s1.uncertainty_product == doctest::Approx(1.5).epsilon(1e-14));
  const auto s2 = statistics(CoherentSpec::automatic(LadderIndex(2), 0.0));
  CHECK(s2.uncertainty_product == doctest::Approx(2.5).epsilon(1e-14));

  const auto s = statistics(CoherentSpec::automatic(LadderIndex(0), cplx(1.0, 1.0)));
  CHECK(std::abs(s.uncertainty_product - (a_norm_squared(LadderIndex(0), std::sqrt(2.0)) + 0.5)) < 1e-12);
}

TEST_CASE("statistics identity chain and series agreement") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const LadderIndex j(trial % 3);
    const auto spec = CoherentSpec::automatic(j, random_alpha(rng, 5.0));
    const auto s = statistics(spec);
    const double scale = s.mean_H;
    CHECK(std::abs(s.mean_x) < 1e-12 * scale);
    CHECK(std::abs(s.mean_p) < 1e-12 * scale);
    CHECK(std::abs(s.mean_a2) < 1e-12 * scale);
    CHECK(std::abs(s.mean_x2 - s.mean_H) < 1e-12 * scale);
    CHECK(std::abs(s.mean_p2 - s.mean_H) < 1e-12 * scale);
    CHECK(std::abs(s.uncertainty_product - s.mean_H) < 1e-12 * scale);
    CHECK(std::abs(s.mean_number - a_norm_squared(j, std::abs(spec.alpha))) < 1e-10);
  }
}

TEST_CASE("evolution law") {
  const CoherentSpec spec{LadderIndex(1), cplx(0.7, -1.2), 40};
  const auto period = evolve(spec, 2 * pi / 3);
  CHECK(std::abs(period.evolved.alpha - spec.alpha) < 1e-15);
  CHECK(std::abs(period.phase - std::polar(1.0, -1.5 * 2 * pi / 3)) < 1e-15);

  const auto still = evolve(spec, 0.0);
  CHECK(still.phase == cplx(1.0));
  CHECK(still.evolved.alpha == spec.alpha);

  const auto half = evolve({LadderIndex(0), 1.0, 10}, pi / 3);
  CHECK(std::abs(half.evolved.alpha - cplx(-1.0)) < 1e-15);
}

TEST_CASE("diagonal evolution equals phase times rebuilt state") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const LadderIndex j(trial % 3);
    const auto spec = CoherentSpec::automatic(j, random_alpha(rng, 5.0));
    const double t = time(rng);
    const auto evolved = evolve_diagonal(build_cs(spec), t);
    const auto e = evolve(spec, t);
    const Eigen::VectorXcd rebuilt = e.phase * build_cs(e.evolved).coeffs();
    CHECK((evolved.coeffs() - rebuilt).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("standard coherent state") {
  const auto z0 = standard_cs_nonnorm(0.0, 1);
  CHECK(z0[0] == cplx(1.0));
  const auto z1 = standard_cs_nonnorm(1.0, standard_cs_truncation(1.0));
  CHECK(std::abs(z1[2] - 1.0 / std::sqrt(2.0)) < 1e-16);
  const auto z2 = standard_cs_nonnorm(2.0, standard_cs_truncation(2.0));
  CHECK(std::abs(z2.norm() * z2.norm() / std::exp(4.0) - 1.0) < 1e-10);
  CHECK_THROWS_AS(standard_cs_nonnorm(3.0, 20), TruncationError);
}

TEST_CASE("cube root") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx alpha = random_alpha(rng, 20.0);
    const cplx z = principal_cube_root(alpha);
    CHECK(std::abs(z * z * z - alpha) < 1e-13 * std::abs(alpha));
    CHECK(std::arg(z) > -pi / 3 - 1e-15);
    CHECK(std::arg(z) <= pi / 3 + 1e-15);
  }
}

TEST_CASE("triangle weights match the closed-form phases") {
  const cplx w = std::polar(1.0, 2 * pi / 3);
  const std::array<std::array<cplx, 3>, 3> phases{{
      {1.0, 1.0, 1.0},
      {1.0, -std::polar(1.0, pi / 3), std::polar(1.0, 2 * pi / 3)},
      {1.0, std::polar(1.0, 2 * pi / 3), std::polar(1.0, 4 * pi / 3)},
  }};
  for (const auto j : kAllLadders) {
    const auto d = triangle_decompose(cplx(0.4, 0.9), j);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(d.weights[k] - phases[std::size_t(j.value())][k] / 3.0) < 1e-15);
      CHECK(std::abs(std::abs(d.weights[k]) - 1.0 / 3.0) < 1e-15);
      CHECK(std::abs(d.labels[k] - cplx(0.4, 0.9) * std::pow(w, double(k))) < 1e-15);
    }
  }
}

TEST_CASE("triangle reconstruction against direct coefficients at N = 30") {
  for (const auto j : kAllLadders) {
    const auto rebuilt = reconstruct(triangle_decompose(1.0, j), 30);
    for (std::size_t m = 0; m < 30; ++m) {
      const cplx want = (int(m % 3) == j.value()) ? direct_coefficient(1.0, m) : 0.0;
      CHECK(std::abs(rebuilt[m] - want) < 1e-12);
    }
  }
}

TEST_CASE("triangle reconstruction for random labels") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const cplx z = random_alpha(rng, 3.0);
    for (const auto j : kAllLadders) {
      double worst = 0.0;
      for (const auto& row : decomposition_report(j, z)) worst = std::max(worst, row.abs_error);
      CHECK(worst < 1e-12);
    }
  }
  const auto trivial = decomposition_report(LadderIndex(0), 0.0);
  CHECK(trivial.size() == 1);
  CHECK(trivial[0].reconstructed == cplx(1.0));
}

TEST_CASE("mod-3 partition of the exponential series") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx z = random_alpha(rng, 3.0);
    const auto n = standard_cs_truncation(std::abs(z));
    double total = 0.0;
    for (const auto j : kAllLadders) total += std::pow(multiphoton_cs_nonnorm(j, z, n).norm(), 2);
    CHECK(std::abs(total / std::exp(std::norm(z)) - 1.0) < 1e-10);
  }
}

TEST_CASE("families on different ladders are orthogonal") {
  const std::size_t n = 60;
  for (const auto j : kAllLadders) {
    for (const auto k : kAllLadders) {
      if (j == k) continue;
      const auto a = build_cs({j, cplx(1.3, 0.2), n});
      const auto b = build_cs({k, cplx(-0.4, 2.1), n});
      CHECK(a.dot(b) == cplx(0.0));
    }
  }
}

TEST_CASE("j = 1 reconstruction vanishes off its ladder") {
  const auto rebuilt = reconstruct(triangle_decompose(1.0, LadderIndex(1)), 30);
  CHECK(rebuilt.on_ladder(LadderIndex(1), 1e-12));
}
