#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "csv.hpp"
#include "gbu/coherent.hpp"
#include "gbu/errors.hpp"
#include "gbu/kernels.hpp"
#include "gbu/moments.hpp"

#ifndef GBU_VERSION
#define GBU_VERSION "unknown"
#endif

namespace gbu::cli {

namespace {

constexpr double kSpotTolerance = 1e-6;
constexpr std::size_t kSpotPoints = 100;
constexpr double kDecomposeTolerance = 1e-12;

std::string complex_text(cplx z) {
  return fmt(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::string rational_text(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string uint128_text(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<LadderIndex> ladders_for(const std::optional<LadderIndex>& j) {
  if (j) return {*j};
  return {kAllLadders.begin(), kAllLadders.end()};
}

}  // namespace

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  out << "kernels: " << kernels::isa_name(kernels::active().isa) << '\n';
  if (o.fault != Fault::None) out << "fault injected: " << fault_name(o.fault) << '\n';
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& c : run_checks(o)) {
    (c.pass ? passed : failed) += 1;
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured=" << sci(c.measured)
        << (c.must_exceed ? " needs > " : " tol=") << sci(c.threshold) << "  " << c.detail << '\n';
  }
  out << "CHECKS passed=" << passed << " failed=" << failed << '\n';
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_uncertainty(const UncertaintyOptions& o, std::ostream& out) {
  if (!std::isfinite(o.abs_min) || !std::isfinite(o.abs_max) || o.abs_min < 0.0 || o.abs_max < o.abs_min) {
    throw UsageError("uncertainty sweep needs 0 <= abs-min <= abs-max");
  }
  if (!(o.abs_step > 0.0) || !std::isfinite(o.abs_step)) throw UsageError("abs-step must be positive");
  const UniformGrid sweep = o.abs_max > o.abs_min ? UniformGrid::from_step(o.abs_min, o.abs_max, o.abs_step)
                                                  : UniformGrid{o.abs_min, o.abs_min, 1};
  CsvBuffer csv;
  csv.comment("uncertainty product (dx)(dp) of |alpha>_j, real alpha");
  csv.comment("abs_alpha: [" + fmt(sweep.min) + ", " + fmt(sweep.max) + "] points=" + std::to_string(sweep.points));
  csv.comment("truncation: next term < 1e-28 x partial sum; minima 1/2, 3/2, 5/2 at alpha = 0");
  csv.header({"abs_alpha", "j", "uncertainty_product"});
  for (std::size_t i = 0; i < sweep.points; ++i) {
    const double r = sweep.at(i);
    for (const auto j : ladders_for(o.j)) {
      const auto s = statistics(CoherentSpec::automatic(j, r));
      csv.row({fmt(r), std::to_string(j.value()), fmt(s.uncertainty_product)});
    }
  }
  write_file(o.out, csv.str());
  out << "wrote " << o.out.string() << " (" << sweep.points << " sweep points)\n";
  return kExitOk;
}

int cmd_piv(const PivOptions& o, std::ostream& out) {
  if (o.y_steps < 2 || !(o.y_max > o.y_min)) throw UsageError("piv grid needs ymax > ymin and ysteps >= 2");
  if (!(o.delta >= 0.0) || !std::isfinite(o.delta)) throw UsageError("delta must be finite and >= 0");
  const UniformGrid grid{o.y_min, o.y_max, o.y_steps};
  const auto sols = tabulated_solutions();

  CsvBuffer csv;
  csv.comment("Painleve IV residual g'' - [g'^2/(2g) + 3/2 g^3 + 4y g^2 + 2(y^2 - a) g + b/g]");
  csv.comment("y: [" + fmt(grid.min) + ", " + fmt(grid.max) + "] points=" + std::to_string(grid.points) +
              "; excluded within delta=" + fmt(o.delta) + " of poles and zeros of g");
  csv.comment("a = E2+E3-2E1-1 with E_j = (2j-1)/6; the sign +2E1 would give a=2/3 for solution 1, "
              "which contradicts its (a, b) pair");
  std::vector<std::vector<ResidualSample>> scans;
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const auto p = piv_parameters_exact(ExtremalSeed::leading(ExtremalIndex(static_cast<int>(k) + 1)));
    scans.push_back(residual_scan(sols[k], grid, o.delta));
    csv.comment("solution " + std::to_string(k + 1) + ": " + sols[k].name + "; a=" + rational_text(p.a) +
                " b=" + rational_text(p.b) + "; max|residual|=" + sci(max_abs_residual(scans.back())));
  }
  csv.header({"solution_id", "y", "g", "residual", "excluded"});
  for (std::size_t k = 0; k < scans.size(); ++k) {
    for (const auto& s : scans[k]) {
      csv.row({std::to_string(k + 1), fmt(s.y), fmt(s.g), fmt(s.residual), s.excluded ? "1" : "0"});
    }
  }
  write_file(o.out, csv.str());
  for (std::size_t k = 0; k < scans.size(); ++k) {
    out << "solution " << k + 1 << ": max|residual| = " << sci(max_abs_residual(scans[k])) << '\n';
  }
  out << "wrote " << o.out.string() << '\n';
  return kExitOk;
}

int cmd_density(const DensityOptions& o, std::ostream& out, std::ostream& err) {
  try {
    o.grid.validate();
  } catch (const InvalidGrid& e) {
    throw UsageError(e.what());
  }
  const auto ladders = ladders_for(o.j);
  const auto xs = o.grid.x_axis();
  const auto ts = o.grid.t_axis();

  // Every spot check runs before any file is written.
  std::vector<double> spot_worst;
  for (const auto j : ladders) {
    std::optional<GaussianWavePacket> gauss;
    try {
      gauss.emplace(j, o.z);
    } catch (const std::domain_error& e) {
      throw UsageError("j=" + std::to_string(j.value()) + ", z=" + complex_text(o.z) + ": " + e.what());
    }
    const FockWavePacket fock(j, o.z);
    std::mt19937_64 rng(977 + static_cast<std::uint64_t>(j.value()));
    std::uniform_int_distribution<std::size_t> pick_x(0, xs.points - 1);
    std::uniform_int_distribution<std::size_t> pick_t(0, ts.points - 1);
    double worst = 0.0;
    for (std::size_t p = 0; p < kSpotPoints; ++p) {
      const double x = xs.at(pick_x(rng));
      const double t = ts.at(pick_t(rng));
      const double bias = o.fault == Fault::SpotCheck ? 1e-5 : 0.0;
      worst = std::max(worst, std::abs(fock.density(x, t) + bias - gauss->density(x, t)));
    }
    if (!(worst <= kSpotTolerance)) {
      err << "internal-consistency error: j=" << j.value() << " Fock and Gaussian densities differ by "
          << sci(worst) << " (tolerance " << sci(kSpotTolerance) << "); no file written\n";
      return kExitInconsistent;
    }
    spot_worst.push_back(worst);
  }

  for (std::size_t li = 0; li < ladders.size(); ++li) {
    const auto j = ladders[li];
    std::filesystem::path path = o.out;
    if (!o.j) {
      const auto ext = o.out.has_extension() ? o.out.extension().string() : std::string(".csv");
      path = o.out.parent_path() / (o.out.stem().string() + "_j" + std::to_string(j.value()) + ext);
    }
    const auto field = density_gaussian(j, o.z, o.grid);
    double norm_dev = 0.0;
    for (std::size_t k = 0; k < ts.points; ++k) norm_dev = std::max(norm_dev, std::abs(field.slice_integral(k) - 1.0));

    const std::string grid_x = "[" + fmt(xs.min) + ", " + fmt(xs.max) + "] points=" + std::to_string(xs.points);
    const std::string grid_t = "[" + fmt(ts.min) + ", " + fmt(ts.max) + "] points=" + std::to_string(ts.points);
    CsvBuffer csv;
    csv.comment("probability density rho_j(x, t), Gaussian superposition path");
    csv.comment("j=" + std::to_string(j.value()) + " z=" + complex_text(o.z));
    csv.comment("x: " + grid_x);
    csv.comment("t: " + grid_t);
    csv.comment("spot check against the Fock sum at " + std::to_string(kSpotPoints) +
                " points: max|diff|=" + sci(spot_worst[li]) + " tolerance=" + sci(kSpotTolerance));
    csv.header({"t", "x", "rho"});
    for (std::size_t k = 0; k < ts.points; ++k) {
      const std::string t = fmt(ts.at(k));
      for (std::size_t i = 0; i < xs.points; ++i) csv.row({t, fmt(xs.at(i)), fmt(field.at(k, i))});
    }

    std::ostringstream meta;
    meta << "version = " << GBU_VERSION << '\n'
         << "j = " << j.value() << '\n'
         << "z_re = " << fmt(o.z.real()) << '\n'
         << "z_im = " << fmt(o.z.imag()) << '\n'
         << "x_min = " << fmt(xs.min) << '\n'
         << "x_max = " << fmt(xs.max) << '\n'
         << "x_steps = " << xs.points << '\n'
         << "t_min = " << fmt(ts.min) << '\n'
         << "t_max = " << fmt(ts.max) << '\n'
         << "t_steps = " << ts.points << '\n'
         << "path = gaussian\n"
         << "spot_check_points = " << kSpotPoints << '\n'
         << "spot_check_max_abs_diff = " << fmt(spot_worst[li]) << '\n'
         << "slice_integral_max_deviation = " << fmt(norm_dev) << '\n';

    write_file(path, csv.str());
    auto meta_path = path;
    meta_path += ".meta";
    write_file(meta_path, meta.str());
    out << "wrote " << path.string() << " (slice integrals within " << sci(norm_dev) << " of 1)\n";
  }
  return kExitOk;
}

int cmd_decompose(const DecomposeOptions& o, std::ostream& out) {
  const auto d = triangle_decompose(o.z, o.j);
  const auto rows = decomposition_report(o.j, o.z, o.truncation);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_error);

  CsvBuffer csv;
  csv.comment("|z>_j against sum_k c_k |z w^k>, w = e^{2 pi i/3}, unnormalized coefficients");
  csv.comment("j=" + std::to_string(o.j.value()) + " z=" + complex_text(o.z) + " N=" + std::to_string(rows.size()));
  for (std::size_t k = 0; k < 3; ++k) {
    csv.comment("c_" + std::to_string(k) + "=" + complex_text(d.weights[k]) + " label_" + std::to_string(k) + "=" +
                complex_text(d.labels[k]));
  }
  csv.comment("max abs_error=" + sci(worst) + " tolerance=" + sci(kDecomposeTolerance));
  csv.header({"n", "target_re", "target_im", "reconstructed_re", "reconstructed_im", "abs_error"});
  for (const auto& r : rows) {
    csv.row({std::to_string(r.n), fmt(r.target.real()), fmt(r.target.imag()), fmt(r.reconstructed.real()),
             fmt(r.reconstructed.imag()), fmt(r.abs_error)});
  }
  write_file(o.out, csv.str());
  out << "max coefficient error " << sci(worst) << " over " << rows.size() << " coefficients\n";
  out << "wrote " << o.out.string() << '\n';
  return worst < kDecomposeTolerance ? kExitOk : kExitCheckFailed;
}

int cmd_moments(const MomentsOptions& o, std::ostream& out) {
  std::ifstream in(o.samples);
  if (!in) throw UsageError("cannot read samples file " + o.samples.string());
  std::vector<WeightSample> samples;
  try {
    samples = parse_weight_samples(in);
  } catch (const ParseError& e) {
    throw UsageError(o.samples.string() + ": " + e.what());
  }
  std::vector<MomentRow> rows;
  try {
    rows = moment_check(o.j, samples, o.n_max);
  } catch (const InvalidMeasure& e) {
    throw UsageError(o.samples.string() + ": " + e.what());
  }

  CsvBuffer csv;
  csv.comment("trapezoid moments of x^{n-1} f(x) against Gamma(3(n-1)+j+1) = (3(n-1)+j)!");
  csv.comment("j=" + std::to_string(o.j.value()) + " samples=" + std::to_string(samples.size()) + " from " +
              o.samples.filename().string() + "; pass when rel_error <= 1e-4");
  csv.header({"n", "computed", "target", "rel_error", "pass"});
  std::size_t passed = 0;
  for (const auto& r : rows) {
    const auto target = factorial_exact(static_cast<unsigned>(3 * (r.n - 1) + o.j.value()));
    csv.row({std::to_string(r.n), fmt(r.computed), uint128_text(target), fmt(r.rel_error), r.pass ? "1" : "0"});
    passed += r.pass ? 1 : 0;
  }
  write_file(o.out, csv.str());
  out << "moments: passed=" << passed << " failed=" << rows.size() - passed << '\n';
  out << "wrote " << o.out.string() << '\n';
  return kExitOk;
}

}  // namespace gbu::cli
