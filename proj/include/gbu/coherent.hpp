#pragma once

// Eigenstates of a_g = a^3 ("good", "bad" and "ugly" coherent states, one per
// ladder j = 0, 1, 2), their statistics, evolution, and their decomposition
// into three standard coherent states on an equilateral triangle.

#include <array>
#include <cstddef>
#include <vector>

#include "gbu/fock.hpp"

namespace gbu {

/// Largest accepted dropped norm^2, relative to the full norm^2.
inline constexpr double kTailTolerance = 1e-24;
/// Truncation rule: stop once the next term is below this fraction of the partial sum.
inline constexpr double kTruncationRule = 1e-28;

/// sum_n |alpha|^{2n} / (3n + j)!, compensated, to relative tail < 1e-14.
double ladder_series(LadderIndex j, double abs_alpha);

/// Smallest N = 3m + j + 1 whose next dropped term is < 1e-28 x partial sum.
std::size_t minimal_truncation(LadderIndex j, double abs_alpha);

/// Dropped norm^2 over full norm^2 when |alpha>_j is cut to |0>..|N-1>.
double relative_tail(LadderIndex j, double abs_alpha, std::size_t truncation);

struct CoherentSpec {
  LadderIndex j;
  cplx alpha;
  std::size_t truncation;

  /// Spec whose truncation follows minimal_truncation.
  static CoherentSpec automatic(LadderIndex j, cplx alpha);
};

/// Normalized |alpha>_j. Throws TruncationError when the truncation drops
/// more than kTailTolerance of the norm.
FockVector build_cs(const CoherentSpec& spec);

/// Same construction without the tail check; normalized over the kept rungs.
FockVector build_cs_unchecked(const CoherentSpec& spec);

/// || a_g |alpha>_j - alpha |alpha>_j || with the Fock-space operators.
double eigen_residual(const CoherentSpec& spec);

/// |a |alpha>_j|^2 as a ratio of the ladder series.
double a_norm_squared(LadderIndex j, double abs_alpha);

struct CSStatistics {
  double mean_x;
  double mean_p;
  double mean_x2;
  double mean_p2;
  double mean_H;
  double uncertainty_product;
  /// <a^+ a>
  double mean_number;
  /// <a^2>; vanishes on a single mod-3 ladder.
  cplx mean_a2;
};

/// Quadratic forms of x, p, x^2, p^2, H, a^+a and a^2 in the state.
CSStatistics statistics(const CoherentSpec& spec);

struct Evolution {
  cplx phase;  // e^{-i(j + 1/2) t}
  CoherentSpec evolved;  // alpha -> alpha e^{-3it}
};

Evolution evolve(const CoherentSpec& spec, double t);

/// Smallest N for which the standard coherent state |z> drops < kTailTolerance.
std::size_t standard_cs_truncation(double abs_z);

/// sum_n z^n / sqrt(n!) |n>, unnormalized. Throws TruncationError if N is too small.
FockVector standard_cs_nonnorm(cplx z, std::size_t truncation);

/// sum_n z^{3n+j} / sqrt((3n+j)!) |3n+j>, unnormalized; no tail check.
FockVector multiphoton_cs_nonnorm(LadderIndex j, cplx z, std::size_t truncation);

/// The cube root of alpha with argument in (-pi/3, pi/3].
cplx principal_cube_root(cplx alpha);

struct TriangleDecomposition {
  LadderIndex j;
  cplx z;
  /// c_k multiplying |z e^{i 2 pi k / 3}>.
  std::array<cplx, 3> weights;
  std::array<cplx, 3> labels;
};

/// Weights from the roots-of-unity filter: c_k = e^{-i 2 pi j k / 3} / 3.
TriangleDecomposition triangle_decompose(cplx z, LadderIndex j);

/// sum_k c_k |z_k> truncated to N.
FockVector reconstruct(const TriangleDecomposition& d, std::size_t truncation);

struct DecompositionRow {
  std::size_t n;
  cplx target;
  cplx reconstructed;
  double abs_error;
};

/// Coefficientwise comparison of |z>_j against its triangle reconstruction;
/// N = 0 picks standard_cs_truncation(|z|).
std::vector<DecompositionRow> decomposition_report(LadderIndex j, cplx z,
                                                   std::size_t truncation = 0);

}  // namespace gbu
