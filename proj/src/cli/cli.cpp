#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "commands.hpp"
#include "gbu/errors.hpp"

namespace gbu::cli {

namespace {

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) return "must be a finite number: " + s;
      } catch (const std::exception&) {
        return "not a number: " + s;
      }
      return {};
    },
    "FINITE");

struct Complex {
  double re = 0.0;
  double im = 0.0;
  cplx value() const { return {re, im}; }
};

void add_complex(CLI::App* app, const std::string& name, Complex& c, const std::string& what) {
  app->add_option("--" + name + "-re", c.re, "real part of " + what)->check(kFinite);
  app->add_option("--" + name + "-im", c.im, "imaginary part of " + what)->check(kFinite);
}

void add_ladder(CLI::App* app, int& j, const std::string& help) {
  app->add_option("--j", j, help)->check(CLI::Range(0, 2));
}

void add_fault(CLI::App* app, std::string& name, std::vector<std::string> allowed) {
  allowed.push_back("none");
  app->add_option("--fault", name)->check(CLI::IsMember(allowed))->group("");
}

std::vector<std::string> fault_names(const std::vector<Fault>& faults) {
  std::vector<std::string> out;
  for (const auto f : faults) out.emplace_back(fault_name(f));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Second-degree polynomial Heisenberg algebra (a_g = a^3): checks and figure data", "gbu");
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  int verify_j = -1;
  long long verify_trunc = 0;
  Complex verify_alpha;
  std::string verify_fault = "none";
  add_ladder(verify, verify_j, "restrict the eigenstate check to one ladder");
  verify->add_option("--trunc", verify_trunc, "truncation N for the eigenstate check")->check(CLI::PositiveNumber);
  add_complex(verify, "alpha", verify_alpha, "the eigenvalue for the eigenstate check");
  add_fault(verify, verify_fault, fault_names(verify_faults()));

  // uncertainty
  auto* uncertainty = app.add_subcommand("uncertainty", "uncertainty product against |alpha|");
  UncertaintyOptions uo;
  int uncertainty_j = -1;
  std::string uncertainty_out = uo.out.string();
  uncertainty->add_option("--abs-min", uo.abs_min, "sweep start")->check(kFinite);
  uncertainty->add_option("--abs-max", uo.abs_max, "sweep end")->check(kFinite);
  uncertainty->add_option("--abs-step", uo.abs_step, "sweep step")->check(kFinite);
  add_ladder(uncertainty, uncertainty_j, "one ladder only (default: all three)");
  uncertainty->add_option("--out", uncertainty_out, "output CSV");

  // piv
  auto* piv = app.add_subcommand("piv", "Painleve IV residual scans of the three solutions");
  PivOptions po;
  std::string piv_out = po.out.string();
  piv->add_option("--ymin", po.y_min, "scan start")->check(kFinite);
  piv->add_option("--ymax", po.y_max, "scan end")->check(kFinite);
  piv->add_option("--ysteps", po.y_steps, "number of scan points")->check(CLI::Range(2, 100000000));
  piv->add_option("--delta", po.delta, "exclusion radius around poles and zeros of g")->check(kFinite);
  piv->add_option("--out", piv_out, "output CSV");

  // density
  auto* density = app.add_subcommand("density", "space-time probability densities");
  DensityOptions dop;
  int density_j = -1;
  Complex density_z{2.0, 0.0};
  std::string density_out = dop.out.string();
  std::string density_fault = "none";
  add_ladder(density, density_j, "one ladder only (default: one file per ladder)");
  add_complex(density, "z", density_z, "the label z (default 2)");
  density->add_option("--xmin", dop.grid.x_min)->check(kFinite);
  density->add_option("--xmax", dop.grid.x_max)->check(kFinite);
  density->add_option("--xsteps", dop.grid.x_steps, "number of x points")->check(CLI::Range(1, 100000000));
  density->add_option("--tmin", dop.grid.t_min)->check(kFinite);
  density->add_option("--tmax", dop.grid.t_max)->check(kFinite);
  density->add_option("--tsteps", dop.grid.t_steps, "number of t points")->check(CLI::Range(1, 100000000));
  density->add_option("--out", density_out, "output CSV (stem when writing all ladders)");
  add_fault(density, density_fault, {std::string(fault_name(Fault::SpotCheck))});

  // decompose
  auto* decompose = app.add_subcommand("decompose", "triangle reconstruction table");
  DecomposeOptions deo;
  int decompose_j = 0;
  Complex decompose_z{2.0, 0.0};
  long long decompose_trunc = 0;
  std::string decompose_out = deo.out.string();
  add_ladder(decompose, decompose_j, "ladder");
  add_complex(decompose, "z", decompose_z, "the label z (default 2)");
  decompose->add_option("--trunc", decompose_trunc, "number of coefficients (default: automatic)")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--out", decompose_out, "output CSV");

  // moments
  auto* moments = app.add_subcommand("moments", "moment test of a sampled weight f_j");
  MomentsOptions mo;
  int moments_j = 0;
  std::string moments_samples;
  std::string moments_out = mo.out.string();
  add_ladder(moments, moments_j, "ladder");
  moments->add_option("--nmax", mo.n_max, "highest row")->check(CLI::Range(1, 10));
  moments->add_option("--samples", moments_samples, "two-column `x f` file")->required();
  moments->add_option("--out", moments_out, "output CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto ladder = [](int j) { return j < 0 ? std::optional<LadderIndex>{} : std::optional<LadderIndex>{LadderIndex(j)}; };

  try {
    if (*verify) {
      VerifyOptions vo;
      vo.fault = *parse_fault(verify_fault);
      vo.j = ladder(verify_j);
      if (verify->count("--trunc")) vo.truncation = static_cast<std::size_t>(verify_trunc);
      if (verify->count("--alpha-re") || verify->count("--alpha-im")) vo.alpha = verify_alpha.value();
      return cmd_verify(vo, out);
    }
    if (*uncertainty) {
      uo.j = ladder(uncertainty_j);
      uo.out = uncertainty_out;
      return cmd_uncertainty(uo, out);
    }
    if (*piv) {
      po.out = piv_out;
      return cmd_piv(po, out);
    }
    if (*density) {
      dop.j = ladder(density_j);
      dop.z = density_z.value();
      dop.out = density_out;
      dop.fault = *parse_fault(density_fault);
      return cmd_density(dop, out, err);
    }
    if (*decompose) {
      deo.j = LadderIndex(decompose_j);
      deo.z = decompose_z.value();
      deo.truncation = static_cast<std::size_t>(decompose_trunc);
      deo.out = decompose_out;
      return cmd_decompose(deo, out);
    }
    if (*moments) {
      mo.j = LadderIndex(moments_j);
      mo.samples = moments_samples;
      mo.out = moments_out;
      return cmd_moments(mo, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gbu::cli
