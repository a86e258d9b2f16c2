#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gbu/cli.hpp"

namespace fs = std::filesystem;
using namespace gbu::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result gbu_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("gbu_cli_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream s(line);
  std::string cell;
  while (std::getline(s, cell, ',')) out.push_back(cell);
  return out;
}

Csv read_csv(const fs::path& p) {
  std::ifstream in(p);
  Csv csv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.comments.push_back(line.substr(2));
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("verify passes on a clean build") {
  const auto r = gbu_run({"verify"});
  CHECK(r.code == kExitOk);
  CHECK(last_line(r.out) == "CHECKS passed=15 failed=0");
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("each fault flips exactly its target") {
  for (const auto fault : verify_faults()) {
    CAPTURE(fault_name(fault));
    VerifyOptions o;
    o.fault = fault;
    std::vector<std::string> failing;
    for (const auto& c : run_checks(o)) {
      if (!c.pass) failing.push_back(c.name);
    }
    REQUIRE(failing.size() == 1);
    CHECK(failing[0] == fault_target(fault));
  }
  const auto r = gbu_run({"verify", "--fault", "piv-sign"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("FAIL piv.parameters") != std::string::npos);
  CHECK(r.out.find("a=2/3") != std::string::npos);
  CHECK(last_line(r.out) == "CHECKS passed=14 failed=1");
}

TEST_CASE("verify with a starved truncation names the suggested N") {
  const auto r = gbu_run({"verify", "--trunc", "5", "--alpha-re", "4"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("FAIL cs.eigen") != std::string::npos);
  CHECK(r.out.find("suggested N=") != std::string::npos);
  CHECK(last_line(r.out) == "CHECKS passed=14 failed=1");
}

TEST_CASE("argument validation") {
  CHECK(gbu_run({}).code == kExitUsage);
  CHECK(gbu_run({"frobnicate"}).code == kExitUsage);
  CHECK(gbu_run({"verify", "--bogus"}).code == kExitUsage);
  CHECK(gbu_run({"verify", "--delta", "0.1"}).code == kExitUsage);
  CHECK(gbu_run({"verify", "--fault", "spot-check"}).code == kExitUsage);
  CHECK(gbu_run({"density", "--j", "3"}).code == kExitUsage);
  CHECK(gbu_run({"density", "--z-re", "nan"}).code == kExitUsage);
  CHECK(gbu_run({"density", "--xsteps", "0"}).code == kExitUsage);
  CHECK(gbu_run({"uncertainty", "--abs-min", "3", "--abs-max", "1"}).code == kExitUsage);
  CHECK(gbu_run({"uncertainty", "--abs-step", "0"}).code == kExitUsage);
  CHECK(gbu_run({"moments"}).code == kExitUsage);
  CHECK(gbu_run({"--help"}).code == kExitOk);
}

TEST_CASE("uncertainty sweep") {
  TempDir dir;
  const auto path = dir / "u.csv";
  REQUIRE(gbu_run({"uncertainty", "--out", path.string()}).code == kExitOk);
  const auto csv = read_csv(path);
  CHECK(csv.header == std::vector<std::string>{"abs_alpha", "j", "uncertainty_product"});
  REQUIRE(csv.rows.size() == 3 * 201);
  std::map<int, std::vector<double>> curve;
  for (const auto& row : csv.rows) curve[std::stoi(row[1])].push_back(std::stod(row[2]));
  CHECK(std::abs(curve[0][0] - 0.5) < 1e-12);
  CHECK(std::abs(curve[1][0] - 1.5) < 1e-12);
  CHECK(std::abs(curve[2][0] - 2.5) < 1e-12);
  for (auto& [j, values] : curve) {
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] >= values[i - 1] - 1e-12);
  }
  // |alpha| = 1 is row 20, |alpha| = 10 is row 200
  CHECK(curve[0][200] > curve[0][20]);

  const auto single = dir / "one.csv";
  REQUIRE(gbu_run({"uncertainty", "--abs-min", "0", "--abs-max", "0", "--j", "0", "--out", single.string()}).code ==
          kExitOk);
  const auto one = read_csv(single);
  REQUIRE(one.rows.size() == 1);
  CHECK(std::abs(std::stod(one.rows[0][2]) - 0.5) < 1e-12);
}

TEST_CASE("piv scan output") {
  TempDir dir;
  const auto path = dir / "piv.csv";
  REQUIRE(gbu_run({"piv", "--out", path.string()}).code == kExitOk);
  const auto csv = read_csv(path);
  CHECK(csv.header == std::vector<std::string>{"solution_id", "y", "g", "residual", "excluded"});
  REQUIRE(csv.rows.size() == 3 * 2001);

  std::string comments;
  for (const auto& c : csv.comments) comments += c + "\n";
  CHECK(comments.find("solution 1: g = -2y/3; a=0 b=-2/9") != std::string::npos);
  CHECK(comments.find("a=-1 b=-8/9") != std::string::npos);
  CHECK(comments.find("a=-2 b=-2/9") != std::string::npos);

  std::size_t excluded3 = 0;
  for (const auto& row : csv.rows) {
    const double y = std::stod(row[1]);
    const bool excluded = row[4] == "1";
    if (!excluded) CHECK(std::abs(std::stod(row[3])) < 1e-10);
    if (row[0] == "3" && std::abs(2 * y * y - 3) < 0.1) CHECK(excluded);
    if (row[0] == "3" && excluded) ++excluded3;
  }
  CHECK(excluded3 > 0);

  const auto again = dir / "piv2.csv";
  REQUIRE(gbu_run({"piv", "--out", again.string()}).code == kExitOk);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("density output") {
  TempDir dir;
  const auto path = dir / "rho.csv";
  REQUIRE(gbu_run({"density", "--j", "0", "--out", path.string()}).code == kExitOk);
  CHECK(fs::exists(dir / "rho.csv.meta"));
  const auto meta = slurp(dir / "rho.csv.meta");
  CHECK(meta.find("j = 0\n") != std::string::npos);
  CHECK(meta.find("z_re = 2\n") != std::string::npos);
  CHECK(meta.find("version = ") != std::string::npos);

  const auto csv = read_csv(path);
  CHECK(csv.header == std::vector<std::string>{"t", "x", "rho"});
  constexpr std::size_t nx = 401, nt = 241;
  REQUIRE(csv.rows.size() == nx * nt);
  const double h = 16.0 / (nx - 1);
  for (std::size_t k = 0; k < nt; ++k) {
    double integral = 0.0;
    for (std::size_t i = 1; i < nx; ++i) {
      integral += 0.5 * h * (std::stod(csv.rows[k * nx + i][2]) + std::stod(csv.rows[k * nx + i - 1][2]));
    }
    CHECK(std::abs(integral - 1.0) < 1e-6);
  }
  // t steps are 2 pi / 240, so a shift by 2 pi / 3 is 80 rows of slices
  double worst = 0.0;
  for (std::size_t k = 0; k + 80 < nt; ++k) {
    for (std::size_t i = 0; i < nx; ++i) {
      worst = std::max(worst, std::abs(std::stod(csv.rows[(k + 80) * nx + i][2]) - std::stod(csv.rows[k * nx + i][2])));
    }
  }
  CHECK(worst < 1e-10);

  const auto again = dir / "rho2.csv";
  REQUIRE(gbu_run({"density", "--j", "0", "--out", again.string()}).code == kExitOk);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("density writes one file per ladder by default") {
  TempDir dir;
  const auto stem = dir / "fig.csv";
  REQUIRE(gbu_run({"density", "--xsteps", "41", "--tsteps", "7", "--out", stem.string()}).code == kExitOk);
  for (const char* name : {"fig_j0.csv", "fig_j1.csv", "fig_j2.csv"}) {
    CHECK(fs::exists(dir / name));
    CHECK(fs::exists(dir / (std::string(name) + ".meta")));
  }
}

TEST_CASE("density spot-check failure writes nothing") {
  TempDir dir;
  const auto path = dir / "bad.csv";
  const auto r = gbu_run({"density", "--fault", "spot-check", "--out", path.string()});
  CHECK(r.code == kExitInconsistent);
  CHECK(r.err.find("internal-consistency") != std::string::npos);
  CHECK(fs::is_empty(dir / ""));

  const auto z0 = gbu_run({"density", "--j", "1", "--z-re", "0", "--out", path.string()});
  CHECK(z0.code == kExitUsage);
  CHECK_FALSE(fs::exists(path));
}

TEST_CASE("decompose output") {
  TempDir dir;
  const auto path = dir / "d.csv";
  REQUIRE(gbu_run({"decompose", "--j", "1", "--z-re", "2", "--out", path.string()}).code == kExitOk);
  const auto csv = read_csv(path);
  CHECK(csv.header ==
        std::vector<std::string>{"n", "target_re", "target_im", "reconstructed_re", "reconstructed_im", "abs_error"});
  double worst = 0.0;
  for (const auto& row : csv.rows) worst = std::max(worst, std::stod(row[5]));
  CHECK(worst < 1e-12);

  REQUIRE(gbu_run({"decompose", "--j", "0", "--z-re", "0", "--out", path.string()}).code == kExitOk);
  const auto trivial = read_csv(path);
  REQUIRE(trivial.rows.size() == 1);
  CHECK(trivial.rows[0][1] == "1");
  CHECK(trivial.rows[0][3] == "1");
  CHECK(trivial.rows[0][5] == "0");
}

TEST_CASE("moments output") {
  TempDir dir;
  const auto samples = dir / "w.txt";
  {
    std::ofstream f(samples);
    f << "# e^{-x}\n";
    for (int i = 0; i <= 60000; ++i) f << i * 1e-3 << ' ' << std::exp(-i * 1e-3) << '\n';
  }
  const auto path = dir / "m.csv";
  const auto r = gbu_run({"moments", "--samples", samples.string(), "--nmax", "2", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  const auto csv = read_csv(path);
  REQUIRE(csv.rows.size() == 2);
  CHECK(csv.rows[0][2] == "1");
  CHECK(csv.rows[0][4] == "1");
  CHECK(csv.rows[1][2] == "6");
  CHECK(csv.rows[1][4] == "0");

  REQUIRE(gbu_run({"moments", "--samples", samples.string(), "--j", "2", "--out", path.string()}).code == kExitOk);
  CHECK(read_csv(path).rows.back()[2] == "8841761993739701954543616000000");  // 29!

  const auto bad = dir / "bad.txt";
  {
    std::ofstream f(bad);
    f << "# x f\n0 1\n0.5 oops\n";
  }
  const auto e = gbu_run({"moments", "--samples", bad.string(), "--out", path.string()});
  CHECK(e.code == kExitUsage);
  CHECK(e.err.find("line 3") != std::string::npos);
  CHECK(gbu_run({"moments", "--samples", (dir / "missing.txt").string()}).code == kExitUsage);
}
