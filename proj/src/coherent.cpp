#include "gbu/coherent.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "gbu/errors.hpp"
#include "gbu/series.hpp"

namespace gbu {

namespace {

constexpr double kSeriesRelTail = 1e-17;

double inv_sqrt_factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v /= std::sqrt(static_cast<double>(i));
  return v;
}

// Ratio t_{n+1} / t_n of the ladder series terms |alpha|^{2n} / (3n + j)!.
double ladder_ratio(int j, std::size_t n, double r2) {
  const double m = 3.0 * static_cast<double>(n) + j;
  return r2 / ((m + 1.0) * (m + 2.0) * (m + 3.0));
}

double first_ladder_term(int j) {
  double v = 1.0;
  for (int i = 2; i <= j; ++i) v /= static_cast<double>(i);
  return v;
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

double ladder_series(LadderIndex j, double abs_alpha) {
  const double r2 = abs_alpha * abs_alpha;
  CompensatedSum sum;
  double term = first_ladder_term(j.value());
  for (std::size_t n = 0;; ++n) {
    sum += term;
    const double ratio = ladder_ratio(j.value(), n, r2);
    term *= ratio;
    // Past the peak (ratio < 1/2) the tail is bounded by the current term.
    if (term == 0.0 || (ratio < 0.5 && term < kSeriesRelTail * sum.value())) break;
  }
  return sum.value();
}

std::size_t minimal_truncation(LadderIndex j, double abs_alpha) {
  const double r2 = abs_alpha * abs_alpha;
  CompensatedSum partial;
  double term = first_ladder_term(j.value());
  for (std::size_t m = 0;; ++m) {
    partial += term;
    term *= ladder_ratio(j.value(), m, r2);
    if (term < kTruncationRule * partial.value()) {
      return 3 * m + static_cast<std::size_t>(j.value()) + 1;
    }
  }
}

double relative_tail(LadderIndex j, double abs_alpha, std::size_t truncation) {
  const auto jj = static_cast<std::size_t>(j.value());
  if (truncation <= jj) return 1.0;
  const std::size_t kept_rungs = (truncation - 1 - jj) / 3 + 1;
  const double r2 = abs_alpha * abs_alpha;
  CompensatedSum kept;
  CompensatedSum tail;
  double term = first_ladder_term(j.value());
  for (std::size_t n = 0;; ++n) {
    if (n < kept_rungs) {
      kept += term;
    } else {
      tail += term;
    }
    const double ratio = ladder_ratio(j.value(), n, r2);
    term *= ratio;
    if (n + 1 >= kept_rungs &&
        (term == 0.0 || (ratio < 0.5 && term < kSeriesRelTail * tail.value()))) {
      break;
    }
  }
  const double total = kept.value() + tail.value();
  return tail.value() / total;
}

CoherentSpec CoherentSpec::automatic(LadderIndex j, cplx alpha) {
  return {j, alpha, minimal_truncation(j, std::abs(alpha))};
}

FockVector build_cs_unchecked(const CoherentSpec& spec) {
  const auto j = static_cast<std::size_t>(spec.j.value());
  if (spec.truncation <= j) {
    throw TruncationError(spec.truncation, minimal_truncation(spec.j, std::abs(spec.alpha)));
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(spec.truncation));
  cplx coeff = inv_sqrt_factorial(spec.j.value());
  CompensatedSum norm2;
  for (std::size_t n = 0; 3 * n + j < spec.truncation; ++n) {
    c(idx(3 * n + j)) = coeff;
    norm2 += std::norm(coeff);
    const double m = static_cast<double>(3 * n + j);
    coeff *= spec.alpha / std::sqrt((m + 1.0) * (m + 2.0) * (m + 3.0));
  }
  c /= std::sqrt(norm2.value());
  return FockVector(std::move(c));
}

FockVector build_cs(const CoherentSpec& spec) {
  const double abs_alpha = std::abs(spec.alpha);
  if (relative_tail(spec.j, abs_alpha, spec.truncation) > kTailTolerance) {
    throw TruncationError(spec.truncation, minimal_truncation(spec.j, abs_alpha));
  }
  return build_cs_unchecked(spec);
}

double eigen_residual(const CoherentSpec& spec) {
  const FockVector v = build_cs_unchecked(spec);
  // a_g vanishes identically below N = 4; pad so the operator exists.
  const std::size_t dim = std::max<std::size_t>(spec.truncation, 4);
  const FockVector vp = v.resized(dim);
  const auto ladders = build_deformed_ladders(dim);
  const FockVector lowered = ladders.lowering.apply(vp);
  return (lowered.coeffs() - spec.alpha * vp.coeffs()).norm();
}

double a_norm_squared(LadderIndex j, double abs_alpha) {
  const double r2 = abs_alpha * abs_alpha;
  switch (j.value()) {
    case 0: return r2 * ladder_series(LadderIndex(2), abs_alpha) / ladder_series(LadderIndex(0), abs_alpha);
    case 1: return ladder_series(LadderIndex(0), abs_alpha) / ladder_series(LadderIndex(1), abs_alpha);
    default: return ladder_series(LadderIndex(1), abs_alpha) / ladder_series(LadderIndex(2), abs_alpha);
  }
}

CSStatistics statistics(const CoherentSpec& spec) {
  const FockVector v = build_cs(spec);
  // Two spare levels keep x^2, p^2 and a^2 exact on the state's support.
  const std::size_t dim = spec.truncation + 2;
  const Eigen::VectorXcd psi = v.resized(dim).coeffs();
  const auto x = build_position(dim);
  const auto p = build_momentum(dim);
  const auto h = build_hamiltonian(dim);
  const auto a = build_annihilation(dim);

  auto expect = [&psi](const FockOperator& op) { return psi.dot(op.entries() * psi); };

  CSStatistics s{};
  s.mean_x = expect(x).real();
  s.mean_p = expect(p).real();
  s.mean_x2 = expect(x * x).real();
  s.mean_p2 = expect(p * p).real();
  s.mean_H = expect(h).real();
  s.mean_number = expect(a.adjoint() * a).real();
  s.mean_a2 = expect(a * a);
  const double var_x = s.mean_x2 - s.mean_x * s.mean_x;
  const double var_p = s.mean_p2 - s.mean_p * s.mean_p;
  s.uncertainty_product = std::sqrt(var_x * var_p);
  return s;
}

Evolution evolve(const CoherentSpec& spec, double t) {
  const double j = spec.j.value();
  Evolution e{std::polar(1.0, -(j + 0.5) * t), spec};
  e.evolved.alpha = spec.alpha * std::polar(1.0, -3.0 * t);
  return e;
}

std::size_t standard_cs_truncation(double abs_z) {
  const double r2 = abs_z * abs_z;
  CompensatedSum partial;
  double term = 1.0;
  for (std::size_t m = 0;; ++m) {
    partial += term;
    term *= r2 / static_cast<double>(m + 1);
    if (term < kTruncationRule * partial.value()) return m + 1;
  }
}

FockVector standard_cs_nonnorm(cplx z, std::size_t truncation) {
  if (truncation == 0) throw InvalidTruncation("standard coherent state needs N >= 1");
  const double r2 = std::norm(z);
  // Tail check: dropped sum_{n >= N} r^{2n}/n! against the full e^{r^2}.
  CompensatedSum kept;
  CompensatedSum tail;
  double term = 1.0;
  for (std::size_t n = 0;; ++n) {
    (n < truncation ? kept : tail) += term;
    const double ratio = r2 / static_cast<double>(n + 1);
    term *= ratio;
    if (n + 1 >= truncation &&
        (term == 0.0 || (ratio < 0.5 && term < kSeriesRelTail * tail.value()))) {
      break;
    }
  }
  if (tail.value() > kTailTolerance * (kept.value() + tail.value())) {
    throw TruncationError(truncation, standard_cs_truncation(std::abs(z)));
  }
  Eigen::VectorXcd c(idx(truncation));
  cplx coeff = 1.0;
  for (std::size_t n = 0; n < truncation; ++n) {
    c(idx(n)) = coeff;
    coeff *= z / std::sqrt(static_cast<double>(n + 1));
  }
  return FockVector(std::move(c));
}

FockVector multiphoton_cs_nonnorm(LadderIndex j, cplx z, std::size_t truncation) {
  if (truncation == 0) throw InvalidTruncation("coherent state needs N >= 1");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(truncation));
  cplx coeff = 1.0;  // z^m / sqrt(m!)
  for (std::size_t m = 0; m < truncation; ++m) {
    if (static_cast<int>(m % 3) == j.value()) c(idx(m)) = coeff;
    coeff *= z / std::sqrt(static_cast<double>(m + 1));
  }
  return FockVector(std::move(c));
}

cplx principal_cube_root(cplx alpha) {
  if (alpha == cplx(0.0)) return 0.0;
  return std::polar(std::cbrt(std::abs(alpha)), std::arg(alpha) / 3.0);
}

TriangleDecomposition triangle_decompose(cplx z, LadderIndex j) {
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  TriangleDecomposition d{j, z, {}, {}};
  for (int k = 0; k < 3; ++k) {
    d.weights[static_cast<std::size_t>(k)] = std::polar(1.0 / 3.0, -third_turn * j.value() * k);
    d.labels[static_cast<std::size_t>(k)] = z * std::polar(1.0, third_turn * k);
  }
  return d;
}

FockVector reconstruct(const TriangleDecomposition& d, std::size_t truncation) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(truncation));
  for (std::size_t k = 0; k < 3; ++k) {
    c += d.weights[k] * standard_cs_nonnorm(d.labels[k], truncation).coeffs();
  }
  return FockVector(std::move(c));
}

std::vector<DecompositionRow> decomposition_report(LadderIndex j, cplx z, std::size_t truncation) {
  if (truncation == 0) truncation = standard_cs_truncation(std::abs(z));
  const FockVector target = multiphoton_cs_nonnorm(j, z, truncation);
  const FockVector rebuilt = reconstruct(triangle_decompose(z, j), truncation);
  std::vector<DecompositionRow> rows(truncation);
  for (std::size_t n = 0; n < truncation; ++n) {
    rows[n] = {n, target[n], rebuilt[n], std::abs(target[n] - rebuilt[n])};
  }
  return rows;
}

}  // namespace gbu
