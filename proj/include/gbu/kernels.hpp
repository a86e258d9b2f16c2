#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// ISA-specific variants. The variant is chosen once at runtime from CPU
// features; GBU_ISA=scalar in the environment forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gbu::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  /// out[i] = |sum_n (c_re[n] + i c_im[n]) psi_n(xs[i])|^2 for n < n_terms.
  void (*fock_density)(const double* c_re, const double* c_im, std::size_t n_terms,
                       const double* xs, double* out, std::size_t count);

  /// out[i] = psi_n(xs[i]), normalized Hermite function.
  void (*hermite_row)(int n, const double* xs, double* out, std::size_t count);

  /// out[i] = PIV residual at y[i] given g, g', g'' samples and (a, b).
  void (*piv_residual)(const double* y, const double* g, const double* dg, const double* d2g,
                       double a, double b, double* out, std::size_t count);
};

bool isa_supported(Isa isa) noexcept;

/// Throws std::runtime_error when the ISA is not available on this CPU/build.
const KernelTable& table(Isa isa);

/// Best supported table, honoring the GBU_ISA override.
const KernelTable& active();

/// Reference single-point PIV residual; the batch kernels reproduce it.
inline double piv_residual_point(double y, double g, double dg, double d2g, double a,
                                 double b) noexcept {
  const double g2 = g * g;
  const double rhs = (dg * dg) / (2.0 * g) + 1.5 * g2 * g + 4.0 * y * g2 +
                     2.0 * (y * y - a) * g + b / g;
  return d2g - rhs;
}

// Span front ends over the active table.
void fock_density(std::span<const std::complex<double>> coeffs, std::span<const double> xs,
                  std::span<double> out, const KernelTable& k = active());
void hermite_row(int n, std::span<const double> xs, std::span<double> out,
                 const KernelTable& k = active());

}  // namespace gbu::kernels
