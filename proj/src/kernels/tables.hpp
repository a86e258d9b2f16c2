#pragma once

#include <cstddef>
#include <vector>

#include "gbu/kernels.hpp"

namespace gbu::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(GBU_HAVE_AVX2_TU)
extern const KernelTable kAvx2Table;
#endif

inline constexpr double kInvPiQuarter = 0.75112554446494248286;  // pi^{-1/4}

// psi_{n+1} = up[n] * x * psi_n - down[n] * psi_{n-1}
struct HermiteRecurrence {
  std::vector<double> up;
  std::vector<double> down;

  explicit HermiteRecurrence(std::size_t n_terms);
};

// Scalar reference loops, shared with the SIMD tails.
void fock_density_scalar(const HermiteRecurrence& rec, const double* c_re, const double* c_im,
                         std::size_t n_terms, const double* xs, double* out, std::size_t count);
void hermite_row_scalar(const HermiteRecurrence& rec, int n, const double* xs, double* out,
                        std::size_t count);
void piv_residual_scalar(const double* y, const double* g, const double* dg, const double* d2g,
                         double a, double b, double* out, std::size_t count);

}  // namespace gbu::kernels::detail
