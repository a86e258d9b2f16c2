#pragma once

// Painleve IV residuals and the three closed-form solutions generated by the
// oscillator extremal states |0>, |1>, |2> in the rescaled variable y = sqrt(3) x.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gbu/fock.hpp"
#include "gbu/grid.hpp"

namespace gbu {

inline constexpr double kDefaultExclusion = 0.1;

struct PivSolution {
  std::string name;
  std::function<double(double)> g;
  std::function<double(double)> g_prime;
  std::function<double(double)> g_double_prime;
  double a = 0.0;
  double b = 0.0;
  /// Poles of g.
  std::vector<double> singularities;
  /// Real zeros of g. The residual divides by g, so these are excluded too.
  std::vector<double> zeros;

  /// The pole or zero lying within `delta` of y, if any.
  std::optional<double> excluded_by(double y, double delta) const;
};

/// Sign in front of 2E1 in the parameter `a`. Only Minus reproduces the three
/// closed-form (a, b) pairs; Plus gives a = 2/3 for the first one.
enum class ParameterSign { Minus, Plus };

class ExtremalSeed {
 public:
  explicit ExtremalSeed(std::array<ExtremalIndex, 3> ordering);

  /// The ordering with `first` in front and the other two ascending:
  /// (1,2,3), (2,1,3), (3,1,2).
  static ExtremalSeed leading(ExtremalIndex first);

  const std::array<ExtremalIndex, 3>& ordering() const noexcept { return ordering_; }

  /// E_j / 3 in seed order.
  std::array<double, 3> energies_tilde() const;

  /// Same leading state with the second and third labels exchanged.
  ExtremalSeed swapped() const;

 private:
  std::array<ExtremalIndex, 3> ordering_;
};

struct PivParameters {
  double a;
  double b;
};

/// Reduced fraction num/den.
struct Rational {
  std::int64_t num;
  std::int64_t den;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ExactPivParameters {
  Rational a;
  Rational b;
};

PivParameters piv_parameters(const ExtremalSeed& seed,
                             ParameterSign sign = ParameterSign::Minus);

/// Same formula in exact arithmetic: every E~_j is (2j - 1)/6.
ExactPivParameters piv_parameters_exact(const ExtremalSeed& seed,
                                        ParameterSign sign = ParameterSign::Minus);

/// g(y) = -y - d/dy ln phi1(y), with phi1 = H_k(y/sqrt3) exp(-y^2/6) the
/// leading extremal state, analytic g', g'', and (a, b) from piv_parameters.
PivSolution solution_from_extremal(const ExtremalSeed& seed,
                                   ParameterSign sign = ParameterSign::Minus);

/// The three explicit solutions with hand-written derivatives:
/// g = -2y/3; -2y/3 - 1/y; -2y/3 - 4y/(2y^2 - 3).
std::array<PivSolution, 3> tabulated_solutions();

/// g'' - [g'^2/(2g) + 3/2 g^3 + 4y g^2 + 2(y^2 - a) g + b/g] at y.
/// Throws SingularPoint within `delta` of a pole or zero of g, and
/// DivisionByZero if g(y) is exactly zero.
double piv_residual(const PivSolution& sol, double y, double delta = kDefaultExclusion);

struct ResidualSample {
  double y;
  double g;         // NaN when y sits on a pole
  double residual;  // NaN when excluded
  bool excluded;
};

std::vector<ResidualSample> residual_scan(const PivSolution& sol, const UniformGrid& grid,
                                          double delta = kDefaultExclusion);

/// Largest |residual| over the non-excluded samples.
double max_abs_residual(const std::vector<ResidualSample>& scan);

/// Copy of `sol` whose derivatives come from 5-point central differences of g.
PivSolution with_finite_differences(const PivSolution& sol, double h = 1e-4);

}  // namespace gbu
