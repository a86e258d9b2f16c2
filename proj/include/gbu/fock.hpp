#pragma once

// Truncated Fock-space linear algebra for the oscillator and the cubed ladder
// operators a_g = a^3, a_g^+ = (a^+)^3. Units hbar = m = omega = 1.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gbu {

using cplx = std::complex<double>;

/// Coherent-state ladder label j in {0,1,2}: the span of |n> with n = j (mod 3).
class LadderIndex {
 public:
  constexpr explicit LadderIndex(int j) : j_(j) {
    if (j < 0 || j > 2) throw std::out_of_range("ladder index must be 0, 1 or 2");
  }
  constexpr int value() const noexcept { return j_; }
  friend constexpr bool operator==(LadderIndex, LadderIndex) = default;

 private:
  int j_;
};

/// Extremal-state label j in {1,2,3}; the extremal state is |j-1>.
class ExtremalIndex {
 public:
  constexpr explicit ExtremalIndex(int j) : j_(j) {
    if (j < 1 || j > 3) throw std::out_of_range("extremal index must be 1, 2 or 3");
  }
  constexpr int value() const noexcept { return j_; }
  constexpr LadderIndex to_ladder() const { return LadderIndex(j_ - 1); }
  static constexpr ExtremalIndex from_ladder(LadderIndex l) { return ExtremalIndex(l.value() + 1); }
  /// Energy j - 1/2 of the extremal state.
  constexpr double energy() const noexcept { return j_ - 0.5; }
  friend constexpr bool operator==(ExtremalIndex, ExtremalIndex) = default;

 private:
  int j_;
};

inline constexpr std::array<LadderIndex, 3> kAllLadders{LadderIndex(0), LadderIndex(1),
                                                        LadderIndex(2)};

class FockVector {
 public:
  /// Zero vector on |0>..|N-1>.
  explicit FockVector(std::size_t truncation);
  explicit FockVector(Eigen::VectorXcd coeffs);

  static FockVector basis(std::size_t n, std::size_t truncation);

  std::size_t truncation() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_(static_cast<Eigen::Index>(n)); }

  double norm() const { return coeffs_.norm(); }
  cplx dot(const FockVector& other) const;  // <this|other>

  /// Copy with zero padding (or truncation) to `truncation` basis states.
  FockVector resized(std::size_t truncation) const;

  /// True when every coefficient off ladder j has magnitude <= tol.
  bool on_ladder(LadderIndex j, double tol = 0.0) const;

 private:
  Eigen::VectorXcd coeffs_;
};

/// Bandwidths of a banded operator: entry (r, c) may be nonzero only for
/// -lower <= c - r <= upper.
struct Band {
  int lower = 0;
  int upper = 0;
};

class FockOperator {
 public:
  explicit FockOperator(Eigen::MatrixXcd entries, std::optional<Band> band = std::nullopt);

  std::size_t truncation() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  std::optional<Band> band() const noexcept { return band_; }
  cplx operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  FockVector apply(const FockVector& v) const;
  FockOperator adjoint() const;

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(cplx s, const FockOperator& a);

 private:
  Eigen::MatrixXcd entries_;
  std::optional<Band> band_;
};

FockOperator build_annihilation(std::size_t truncation);
FockOperator build_creation(std::size_t truncation);
FockOperator build_hamiltonian(std::size_t truncation);
FockOperator build_identity(std::size_t truncation);
/// x = (a + a^+)/sqrt(2)
FockOperator build_position(std::size_t truncation);
/// p = i(a^+ - a)/sqrt(2)
FockOperator build_momentum(std::size_t truncation);

struct DeformedLadders {
  FockOperator lowering;  // a_g = a^3
  FockOperator raising;   // a_g^+ = (a^+)^3
};

/// Exact cube of the truncated annihilation operator and its adjoint. N >= 4.
DeformedLadders build_deformed_ladders(std::size_t truncation);

/// AB - BA.
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// N(E) = (E - 1/2)(E - 3/2)(E - 5/2).
constexpr double number_polynomial(double energy) noexcept {
  return (energy - 0.5) * (energy - 1.5) * (energy - 2.5);
}

/// Diagonal operator N(H + shift). shift = 0 gives a_g^+ a_g. N >= 4.
FockOperator number_analogue(std::size_t truncation, double shift = 0.0);

/// Largest entry magnitude over rows and columns 0..last_index.
double interior_max_abs(const FockOperator& op, std::size_t last_index);
double max_abs(const FockOperator& op);

/// Normalized ladder eigenstate sqrt((j-1)!/(3n+j-1)!) (a_g^+)^n |j-1>.
FockVector ladder_state(ExtremalIndex j, std::size_t rung, std::size_t truncation);

/// Energies j - 1/2 + 3n of each of the three ladders that fit below N;
/// element k holds the ladder seeded by ExtremalIndex(k + 1).
std::array<std::vector<double>, 3> spectrum_decomposition(std::size_t truncation);

/// Diagonal evolution e^{-iHt} applied coefficientwise.
FockVector evolve_diagonal(const FockVector& v, double t);

}  // namespace gbu
