#include "gbu/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

#include "gbu/errors.hpp"
#include "gbu/kernels.hpp"

namespace gbu {

namespace {

// Ascending coefficients.
using Poly = std::vector<double>;

double eval(const Poly& p, double y) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

Poly add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  return a;
}

Poly scale(Poly p, double s) {
  for (auto& c : p) c *= s;
  return p;
}

Poly shift_up(const Poly& p) {
  Poly q(p.size() + 1, 0.0);
  std::copy(p.begin(), p.end(), q.begin() + 1);
  return q;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
}

// H_k(y / sqrt 3) via H_{n+1}(x) = 2x H_n(x) - 2n H_{n-1}(x).
Poly hermite_in_y(int k) {
  const double two_over_root3 = 2.0 / std::sqrt(3.0);
  Poly prev{1.0};
  if (k == 0) return prev;
  Poly cur{0.0, two_over_root3};
  for (int n = 1; n < k; ++n) {
    Poly next = add(scale(shift_up(cur), two_over_root3), scale(prev, -2.0 * n));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> real_roots(Poly p) {
  trim(p);
  const auto degree = static_cast<Eigen::Index>(p.size()) - 1;
  if (degree < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (Eigen::Index r = 1; r < degree; ++r) companion(r, r - 1) = 1.0;
  for (Eigen::Index r = 0; r < degree; ++r) {
    companion(r, degree - 1) = -p[static_cast<std::size_t>(r)] / p.back();
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Poly dp = derivative(p);
  std::vector<double> roots;
  for (const auto& ev : solver.eigenvalues()) {
    if (std::abs(ev.imag()) > 1e-9 * std::max(1.0, std::abs(ev))) continue;
    double y = ev.real();
    for (int it = 0; it < 4; ++it) {
      const double d = eval(dp, y);
      if (d == 0.0) break;
      y -= eval(p, y) / d;
    }
    if (std::abs(y) < 1e-14) y = 0.0;
    roots.push_back(y);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              roots.end());
  return roots;
}

void require_finite_parameters(const PivParameters& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b)) throw std::logic_error("non-finite PIV parameters");
}

Rational reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

std::optional<double> PivSolution::excluded_by(double y, double delta) const {
  for (const double p : singularities) {
    if (std::abs(y - p) < delta) return p;
  }
  for (const double z : zeros) {
    if (std::abs(y - z) < delta) return z;
  }
  return std::nullopt;
}

ExtremalSeed::ExtremalSeed(std::array<ExtremalIndex, 3> ordering) : ordering_(ordering) {
  std::array<bool, 3> seen{};
  for (const auto e : ordering_) {
    auto& s = seen[static_cast<std::size_t>(e.value() - 1)];
    if (s) throw std::invalid_argument("extremal seed ordering must be a permutation of {1,2,3}");
    s = true;
  }
}

ExtremalSeed ExtremalSeed::leading(ExtremalIndex first) {
  std::array<ExtremalIndex, 3> order{first, ExtremalIndex(1), ExtremalIndex(1)};
  std::size_t slot = 1;
  for (int j = 1; j <= 3; ++j) {
    if (j != first.value()) order[slot++] = ExtremalIndex(j);
  }
  return ExtremalSeed(order);
}

std::array<double, 3> ExtremalSeed::energies_tilde() const {
  std::array<double, 3> e{};
  for (std::size_t k = 0; k < 3; ++k) e[k] = ordering_[k].energy() / 3.0;
  return e;
}

ExtremalSeed ExtremalSeed::swapped() const {
  return ExtremalSeed({ordering_[0], ordering_[2], ordering_[1]});
}

PivParameters piv_parameters(const ExtremalSeed& seed, ParameterSign sign) {
  const auto [e1, e2, e3] = seed.energies_tilde();
  const double lead = sign == ParameterSign::Minus ? -2.0 * e1 : 2.0 * e1;
  const double diff = e2 - e3;
  PivParameters p{e2 + e3 + lead - 1.0, -2.0 * diff * diff};
  require_finite_parameters(p);
  return p;
}

ExactPivParameters piv_parameters_exact(const ExtremalSeed& seed, ParameterSign sign) {
  // Work in sixths: 6 E~_j = 2j - 1.
  const auto& o = seed.ordering();
  const std::int64_t s1 = 2 * o[0].value() - 1;
  const std::int64_t s2 = 2 * o[1].value() - 1;
  const std::int64_t s3 = 2 * o[2].value() - 1;
  const std::int64_t lead = sign == ParameterSign::Minus ? -2 * s1 : 2 * s1;
  const std::int64_t d = s2 - s3;
  return {reduce(s2 + s3 + lead - 6, 6), reduce(-2 * d * d, 36)};
}

PivSolution solution_from_extremal(const ExtremalSeed& seed, ParameterSign sign) {
  const ExtremalIndex first = seed.ordering()[0];
  const Poly p = hermite_in_y(first.value() - 1);
  const Poly dp = derivative(p);
  const Poly d2p = derivative(dp);
  const Poly d3p = derivative(d2p);

  // With phi1 = P(y) exp(-y^2/6): d/dy ln phi1 = L(y) - y/3, L = P'/P.
  struct LogDerivative {
    double l, dl, d2l;
  };
  auto log_derivative = [=](double y) {
    const double pv = eval(p, y);
    const double l = eval(dp, y) / pv;
    const double r2 = eval(d2p, y) / pv;
    const double dl = r2 - l * l;
    const double d2l = eval(d3p, y) / pv - l * r2 - 2.0 * l * dl;
    return LogDerivative{l, dl, d2l};
  };

  PivSolution sol;
  sol.name = "extremal |" + std::to_string(first.value() - 1) + ">";
  sol.g = [=](double y) { return -y - (log_derivative(y).l - y / 3.0); };
  sol.g_prime = [=](double y) { return -1.0 - (log_derivative(y).dl - 1.0 / 3.0); };
  sol.g_double_prime = [=](double y) { return -log_derivative(y).d2l; };
  const auto params = piv_parameters(seed, sign);
  sol.a = params.a;
  sol.b = params.b;
  sol.singularities = real_roots(p);
  // g = 0  <=>  -(2/3) y P - P' = 0 away from the poles.
  sol.zeros = real_roots(add(scale(shift_up(p), -2.0 / 3.0), scale(dp, -1.0)));
  return sol;
}

std::array<PivSolution, 3> tabulated_solutions() {
  PivSolution s1;
  s1.name = "g = -2y/3";
  s1.g = [](double y) { return -2.0 * y / 3.0; };
  s1.g_prime = [](double) { return -2.0 / 3.0; };
  s1.g_double_prime = [](double) { return 0.0; };
  s1.a = 0.0;
  s1.b = -2.0 / 9.0;
  s1.zeros = {0.0};

  PivSolution s2;
  s2.name = "g = -2y/3 - 1/y";
  s2.g = [](double y) { return -2.0 * y / 3.0 - 1.0 / y; };
  s2.g_prime = [](double y) { return -2.0 / 3.0 + 1.0 / (y * y); };
  s2.g_double_prime = [](double y) { return -2.0 / (y * y * y); };
  s2.a = -1.0;
  s2.b = -8.0 / 9.0;
  s2.singularities = {0.0};

  PivSolution s3;
  s3.name = "g = -2y/3 - 4y/(2y^2 - 3)";
  s3.g = [](double y) { return -2.0 * y / 3.0 - 4.0 * y / (2.0 * y * y - 3.0); };
  s3.g_prime = [](double y) {
    const double q = 2.0 * y * y - 3.0;
    return -2.0 / 3.0 + (8.0 * y * y + 12.0) / (q * q);
  };
  s3.g_double_prime = [](double y) {
    const double q = 2.0 * y * y - 3.0;
    return -(32.0 * y * y * y + 144.0 * y) / (q * q * q);
  };
  s3.a = -2.0;
  s3.b = -2.0 / 9.0;
  const double pole = std::sqrt(1.5);
  s3.singularities = {-pole, pole};
  s3.zeros = {0.0};

  return {std::move(s1), std::move(s2), std::move(s3)};
}

double piv_residual(const PivSolution& sol, double y, double delta) {
  if (const auto near = sol.excluded_by(y, delta)) throw SingularPoint(y, *near);
  const double g = sol.g(y);
  if (g == 0.0) throw DivisionByZero("g(y) = 0 at y = " + std::to_string(y));
  return kernels::piv_residual_point(y, g, sol.g_prime(y), sol.g_double_prime(y), sol.a, sol.b);
}

std::vector<ResidualSample> residual_scan(const PivSolution& sol, const UniformGrid& grid,
                                          double delta) {
  grid.validate();
  std::vector<ResidualSample> out(grid.points);
  std::vector<std::size_t> live;
  std::vector<double> ys, gs, dgs, d2gs;
  live.reserve(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double y = grid.at(i);
    auto& s = out[i];
    s.y = y;
    const bool on_pole = std::any_of(sol.singularities.begin(), sol.singularities.end(),
                                     [y](double p) { return y == p; });
    s.g = on_pole ? std::nan("") : sol.g(y);
    s.residual = std::nan("");
    s.excluded = sol.excluded_by(y, delta).has_value() || s.g == 0.0 || !std::isfinite(s.g);
    if (s.excluded) continue;
    live.push_back(i);
    ys.push_back(y);
    gs.push_back(s.g);
    dgs.push_back(sol.g_prime(y));
    d2gs.push_back(sol.g_double_prime(y));
  }
  std::vector<double> res(live.size());
  kernels::active().piv_residual(ys.data(), gs.data(), dgs.data(), d2gs.data(), sol.a, sol.b,
                                 res.data(), live.size());
  for (std::size_t k = 0; k < live.size(); ++k) out[live[k]].residual = res[k];
  return out;
}

double max_abs_residual(const std::vector<ResidualSample>& scan) {
  double worst = 0.0;
  for (const auto& s : scan) {
    if (!s.excluded) worst = std::max(worst, std::abs(s.residual));
  }
  return worst;
}

PivSolution with_finite_differences(const PivSolution& sol, double h) {
  PivSolution fd = sol;
  fd.name = sol.name + " (finite differences)";
  const auto g = sol.g;
  fd.g_prime = [g, h](double y) {
    return (g(y - 2 * h) - 8.0 * g(y - h) + 8.0 * g(y + h) - g(y + 2 * h)) / (12.0 * h);
  };
  fd.g_double_prime = [g, h](double y) {
    return (-g(y - 2 * h) + 16.0 * g(y - h) - 30.0 * g(y) + 16.0 * g(y + h) - g(y + 2 * h)) /
           (12.0 * h * h);
  };
  return fd;
}

}  // namespace gbu
