#include <cmath>

#include "tables.hpp"

namespace gbu::kernels::detail {

HermiteRecurrence::HermiteRecurrence(std::size_t n_terms) : up(n_terms), down(n_terms) {
  for (std::size_t n = 0; n < n_terms; ++n) {
    const double np1 = static_cast<double>(n + 1);
    up[n] = std::sqrt(2.0 / np1);
    down[n] = std::sqrt(static_cast<double>(n) / np1);
  }
}

void fock_density_scalar(const HermiteRecurrence& rec, const double* c_re, const double* c_im,
                         std::size_t n_terms, const double* xs, double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const double x = xs[i];
    double prev = 0.0;
    double cur = kInvPiQuarter * std::exp(-0.5 * x * x);
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t n = 0; n < n_terms; ++n) {
      sr += c_re[n] * cur;
      si += c_im[n] * cur;
      const double next = rec.up[n] * x * cur - rec.down[n] * prev;
      prev = cur;
      cur = next;
    }
    out[i] = sr * sr + si * si;
  }
}

void hermite_row_scalar(const HermiteRecurrence& rec, int n, const double* xs, double* out,
                        std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const double x = xs[i];
    double prev = 0.0;
    double cur = kInvPiQuarter * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
      const double next = rec.up[static_cast<std::size_t>(k)] * x * cur -
                          rec.down[static_cast<std::size_t>(k)] * prev;
      prev = cur;
      cur = next;
    }
    out[i] = cur;
  }
}

void piv_residual_scalar(const double* y, const double* g, const double* dg, const double* d2g,
                         double a, double b, double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = piv_residual_point(y[i], g[i], dg[i], d2g[i], a, b);
  }
}

namespace {

void fock_density_entry(const double* c_re, const double* c_im, std::size_t n_terms,
                        const double* xs, double* out, std::size_t count) {
  const HermiteRecurrence rec(n_terms);
  fock_density_scalar(rec, c_re, c_im, n_terms, xs, out, count);
}

void hermite_row_entry(int n, const double* xs, double* out, std::size_t count) {
  const HermiteRecurrence rec(static_cast<std::size_t>(n) + 1);
  hermite_row_scalar(rec, n, xs, out, count);
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar, &fock_density_entry, &hermite_row_entry,
                               &piv_residual_scalar};

}  // namespace gbu::kernels::detail
