#pragma once

// Moment test for the radial weight f_j of the coherent-state completeness
// measure. The weight itself is supplied by the caller as samples.

#include <iosfwd>
#include <span>
#include <vector>

#include "gbu/fock.hpp"

namespace gbu {

struct WeightSample {
  double x;
  double f;
};

/// How row n of the table maps onto a Gamma target.
///  Shifted: integrand x^{n-1}, target Gamma(3(n-1) + j + 1), so row 1 asks
///           for the normalization Gamma(j + 1).
///  Literal: integrand x^{n-1}, target Gamma(3n + j + 1).
enum class MomentIndexing { Shifted, Literal };

inline constexpr int kMaxMomentOrder = 10;

struct MomentRow {
  int n;
  double computed;
  long double target;
  double rel_error;
  bool pass;
};

/// k! exactly, k <= 34.
unsigned __int128 factorial_exact(unsigned k);

/// Exact integer Gamma target for row n (1 <= n <= kMaxMomentOrder).
long double moment_target(LadderIndex j, int n, MomentIndexing indexing = MomentIndexing::Shifted);

/// Trapezoid moments of x^{n-1} f(x) over the samples for n = 1..n_max,
/// compared with the Gamma targets. A row passes when rel_error <= rel_tol.
/// Throws InvalidMeasure for empty, unordered, negative or non-finite samples.
std::vector<MomentRow> moment_check(LadderIndex j, std::span<const WeightSample> samples, int n_max,
                                    double rel_tol = 1e-4,
                                    MomentIndexing indexing = MomentIndexing::Shifted);

/// Reads two whitespace-separated columns `x f`; '#' starts a comment.
/// Throws ParseError carrying the 1-based line number.
std::vector<WeightSample> parse_weight_samples(std::istream& in);

}  // namespace gbu
