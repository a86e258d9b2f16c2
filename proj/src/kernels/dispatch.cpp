#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbu/errors.hpp"
#include "tables.hpp"

namespace gbu::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(GBU_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("kernel ISA not supported here: " + std::string(isa_name(isa)));
  }
#if defined(GBU_HAVE_AVX2_TU)
  if (isa == Isa::Avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("GBU_ISA")) {
    const std::string_view f(forced);
    if (f == "scalar") return table(Isa::Scalar);
    if (f == "avx2") return table(Isa::Avx2);
  }
  if (isa_supported(Isa::Avx2)) return table(Isa::Avx2);
  return table(Isa::Scalar);
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

void fock_density(std::span<const std::complex<double>> coeffs, std::span<const double> xs,
                  std::span<double> out, const KernelTable& k) {
  if (out.size() != xs.size()) throw ShapeMismatch("fock_density: output size differs from input");
  std::vector<double> re(coeffs.size());
  std::vector<double> im(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    re[n] = coeffs[n].real();
    im[n] = coeffs[n].imag();
  }
  k.fock_density(re.data(), im.data(), coeffs.size(), xs.data(), out.data(), xs.size());
}

void hermite_row(int n, std::span<const double> xs, std::span<double> out, const KernelTable& k) {
  if (n < 0) throw std::domain_error("Hermite function order must be >= 0");
  if (out.size() != xs.size()) throw ShapeMismatch("hermite_row: output size differs from input");
  k.hermite_row(n, xs.data(), out.data(), xs.size());
}

}  // namespace gbu::kernels
