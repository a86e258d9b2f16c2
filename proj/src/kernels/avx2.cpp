// AVX2 + FMA variants. Every function that touches 256-bit intrinsics carries
// an explicit target attribute; the dispatcher only hands this table out when
// the CPU reports both features.

#include "tables.hpp"

#if defined(GBU_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>

#define GBU_AVX2 __attribute__((target("avx2,fma")))

namespace gbu::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

// Lane-wise pi^{-1/4} exp(-x^2/2); exp stays scalar, the recurrence is vector.
GBU_AVX2 __m256d ground_state(const double* xs) {
  alignas(32) double g[kLanes];
  for (std::size_t l = 0; l < kLanes; ++l) g[l] = kInvPiQuarter * std::exp(-0.5 * xs[l] * xs[l]);
  return _mm256_load_pd(g);
}

GBU_AVX2 void fock_density_avx2(const double* c_re, const double* c_im, std::size_t n_terms,
                                const double* xs, double* out, std::size_t count) {
  const HermiteRecurrence rec(n_terms);
  const double* up = rec.up.data();
  const double* down = rec.down.data();
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = ground_state(xs + i);
    __m256d sr = _mm256_setzero_pd();
    __m256d si = _mm256_setzero_pd();
    for (std::size_t n = 0; n < n_terms; ++n) {
      sr = _mm256_fmadd_pd(_mm256_set1_pd(c_re[n]), cur, sr);
      si = _mm256_fmadd_pd(_mm256_set1_pd(c_im[n]), cur, si);
      const __m256d ux = _mm256_mul_pd(_mm256_set1_pd(up[n]), x);
      const __m256d next = _mm256_fmsub_pd(ux, cur, _mm256_mul_pd(_mm256_set1_pd(down[n]), prev));
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(sr, sr, _mm256_mul_pd(si, si)));
  }
  if (i < count) fock_density_scalar(rec, c_re, c_im, n_terms, xs + i, out + i, count - i);
}

GBU_AVX2 void hermite_row_avx2(int n, const double* xs, double* out, std::size_t count) {
  const HermiteRecurrence rec(static_cast<std::size_t>(n) + 1);
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = ground_state(xs + i);
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const __m256d ux = _mm256_mul_pd(_mm256_set1_pd(rec.up[kk]), x);
      const __m256d next =
          _mm256_fmsub_pd(ux, cur, _mm256_mul_pd(_mm256_set1_pd(rec.down[kk]), prev));
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out + i, cur);
  }
  if (i < count) hermite_row_scalar(rec, n, xs + i, out + i, count - i);
}

GBU_AVX2 void piv_residual_avx2(const double* y, const double* g, const double* dg,
                                const double* d2g, double a, double b, double* out,
                                std::size_t count) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d onehalf = _mm256_set1_pd(1.5);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vg = _mm256_loadu_pd(g + i);
    const __m256d vdg = _mm256_loadu_pd(dg + i);
    const __m256d vd2g = _mm256_loadu_pd(d2g + i);
    const __m256d inv_g = _mm256_div_pd(_mm256_set1_pd(1.0), vg);
    const __m256d g2 = _mm256_mul_pd(vg, vg);
    // (g'^2/2 + b) / g
    __m256d rhs = _mm256_mul_pd(_mm256_fmadd_pd(_mm256_mul_pd(vdg, vdg), half, vb), inv_g);
    rhs = _mm256_fmadd_pd(_mm256_mul_pd(onehalf, g2), vg, rhs);
    rhs = _mm256_fmadd_pd(_mm256_mul_pd(four, vy), g2, rhs);
    const __m256d y2a = _mm256_fmsub_pd(vy, vy, va);
    rhs = _mm256_fmadd_pd(_mm256_mul_pd(two, y2a), vg, rhs);
    _mm256_storeu_pd(out + i, _mm256_sub_pd(vd2g, rhs));
  }
  if (i < count) piv_residual_scalar(y + i, g + i, dg + i, d2g + i, a, b, out + i, count - i);
}

}  // namespace

const KernelTable kAvx2Table{Isa::Avx2, &fock_density_avx2, &hermite_row_avx2, &piv_residual_avx2};

}  // namespace gbu::kernels::detail

#endif  // GBU_HAVE_AVX2_TU
