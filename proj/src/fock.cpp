#include "gbu/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gbu/errors.hpp"

namespace gbu {

namespace {

void require_truncation(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw InvalidTruncation(std::string(what) + " needs N >= " + std::to_string(minimum) +
                            ", got " + std::to_string(n));
  }
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

FockVector::FockVector(std::size_t truncation) {
  require_truncation(truncation, 1, "FockVector");
  coeffs_ = Eigen::VectorXcd::Zero(idx(truncation));
}

FockVector::FockVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
  require_truncation(truncation(), 1, "FockVector");
}

FockVector FockVector::basis(std::size_t n, std::size_t truncation) {
  if (n >= truncation) {
    throw std::out_of_range("basis state |" + std::to_string(n) + "> outside truncation " +
                            std::to_string(truncation));
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(truncation));
  c(idx(n)) = 1.0;
  return FockVector(std::move(c));
}

cplx FockVector::dot(const FockVector& other) const {
  if (other.truncation() != truncation()) throw ShapeMismatch("inner product of unequal truncations");
  return coeffs_.dot(other.coeffs_);
}

FockVector FockVector::resized(std::size_t truncation) const {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(truncation));
  const auto keep = std::min(truncation, this->truncation());
  c.head(idx(keep)) = coeffs_.head(idx(keep));
  return FockVector(std::move(c));
}

bool FockVector::on_ladder(LadderIndex j, double tol) const {
  for (std::size_t n = 0; n < truncation(); ++n) {
    if (static_cast<int>(n % 3) != j.value() && std::abs((*this)[n]) > tol) return false;
  }
  return true;
}

FockOperator::FockOperator(Eigen::MatrixXcd entries, std::optional<Band> band)
    : entries_(std::move(entries)), band_(band) {
  if (entries_.rows() != entries_.cols()) throw ShapeMismatch("FockOperator must be square");
  require_truncation(truncation(), 1, "FockOperator");
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.truncation() != truncation()) throw ShapeMismatch("operator/vector truncation mismatch");
  return FockVector(Eigen::VectorXcd(entries_ * v.coeffs()));
}

FockOperator FockOperator::adjoint() const {
  std::optional<Band> b;
  if (band_) b = Band{band_->upper, band_->lower};
  return FockOperator(entries_.adjoint(), b);
}

namespace {

std::optional<Band> combine_product(const std::optional<Band>& a, const std::optional<Band>& b) {
  if (!a || !b) return std::nullopt;
  return Band{a->lower + b->lower, a->upper + b->upper};
}

std::optional<Band> combine_sum(const std::optional<Band>& a, const std::optional<Band>& b) {
  if (!a || !b) return std::nullopt;
  return Band{std::max(a->lower, b->lower), std::max(a->upper, b->upper)};
}

void require_same(const FockOperator& a, const FockOperator& b) {
  if (a.truncation() != b.truncation()) {
    throw ShapeMismatch("operator truncations differ: " + std::to_string(a.truncation()) + " vs " +
                        std::to_string(b.truncation()));
  }
}

}  // namespace

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return FockOperator(a.entries_ * b.entries_, combine_product(a.band_, b.band_));
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return FockOperator(a.entries_ + b.entries_, combine_sum(a.band_, b.band_));
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return FockOperator(a.entries_ - b.entries_, combine_sum(a.band_, b.band_));
}

FockOperator operator*(cplx s, const FockOperator& a) { return FockOperator(s * a.entries_, a.band_); }

FockOperator build_annihilation(std::size_t truncation) {
  require_truncation(truncation, 1, "annihilation operator");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(truncation), idx(truncation));
  for (std::size_t n = 1; n < truncation; ++n) m(idx(n - 1), idx(n)) = std::sqrt(static_cast<double>(n));
  return FockOperator(std::move(m), Band{0, 1});
}

FockOperator build_creation(std::size_t truncation) { return build_annihilation(truncation).adjoint(); }

FockOperator build_hamiltonian(std::size_t truncation) {
  require_truncation(truncation, 1, "Hamiltonian");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(truncation), idx(truncation));
  for (std::size_t n = 0; n < truncation; ++n) m(idx(n), idx(n)) = static_cast<double>(n) + 0.5;
  return FockOperator(std::move(m), Band{0, 0});
}

FockOperator build_identity(std::size_t truncation) {
  require_truncation(truncation, 1, "identity");
  return FockOperator(Eigen::MatrixXcd::Identity(idx(truncation), idx(truncation)), Band{0, 0});
}

FockOperator build_position(std::size_t truncation) {
  const auto a = build_annihilation(truncation);
  return cplx(M_SQRT1_2) * (a + a.adjoint());
}

FockOperator build_momentum(std::size_t truncation) {
  const auto a = build_annihilation(truncation);
  return cplx(0.0, M_SQRT1_2) * (a.adjoint() - a);
}

DeformedLadders build_deformed_ladders(std::size_t truncation) {
  require_truncation(truncation, 4, "deformed ladder operators");
  const auto a = build_annihilation(truncation);
  auto lowering = a * a * a;
  auto raising = lowering.adjoint();
  return {std::move(lowering), std::move(raising)};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator number_analogue(std::size_t truncation, double shift) {
  require_truncation(truncation, 4, "number analogue");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(truncation), idx(truncation));
  for (std::size_t n = 0; n < truncation; ++n) {
    m(idx(n), idx(n)) = number_polynomial(static_cast<double>(n) + 0.5 + shift);
  }
  return FockOperator(std::move(m), Band{0, 0});
}

double interior_max_abs(const FockOperator& op, std::size_t last_index) {
  const auto k = std::min(last_index + 1, op.truncation());
  return op.entries().topLeftCorner(idx(k), idx(k)).cwiseAbs().maxCoeff();
}

double max_abs(const FockOperator& op) { return op.entries().cwiseAbs().maxCoeff(); }

FockVector ladder_state(ExtremalIndex j, std::size_t rung, std::size_t truncation) {
  const std::size_t seed = static_cast<std::size_t>(j.value() - 1);
  const std::size_t target = 3 * rung + seed;
  if (target >= truncation) {
    throw std::out_of_range("ladder state |" + std::to_string(target) + "> exceeds truncation " +
                            std::to_string(truncation));
  }
  // Raise the seed rung by rung with the matrix elements of (a^+)^3,
  // <m+3|(a^+)^3|m> = sqrt((m+1)(m+2)(m+3)), then apply sqrt((j-1)!/(3n+j-1)!).
  // Both factors are kept in log form so high rungs do not overflow.
  double log_raised = 0.0;
  for (std::size_t m = seed; m < target; m += 3) {
    log_raised += 0.5 * std::log(static_cast<double>((m + 1) * (m + 2) * (m + 3)));
  }
  const double log_prefactor =
      0.5 * (std::lgamma(static_cast<double>(seed) + 1.0) - std::lgamma(static_cast<double>(target) + 1.0));
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(truncation));
  c(idx(target)) = std::exp(log_raised + log_prefactor);
  return FockVector(std::move(c));
}

std::array<std::vector<double>, 3> spectrum_decomposition(std::size_t truncation) {
  require_truncation(truncation, 3, "spectrum decomposition");
  std::array<std::vector<double>, 3> ladders;
  for (int j = 1; j <= 3; ++j) {
    const ExtremalIndex ext(j);
    for (std::size_t n = 0; 3 * n + static_cast<std::size_t>(j - 1) < truncation; ++n) {
      ladders[static_cast<std::size_t>(j - 1)].push_back(ext.energy() + 3.0 * static_cast<double>(n));
    }
  }
  return ladders;
}

FockVector evolve_diagonal(const FockVector& v, double t) {
  Eigen::VectorXcd c = v.coeffs();
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    c(n) *= std::polar(1.0, -(static_cast<double>(n) + 0.5) * t);
  }
  return FockVector(std::move(c));
}

}  // namespace gbu
