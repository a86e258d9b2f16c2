#include "gbu/moments.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gbu/errors.hpp"
#include "gbu/series.hpp"

namespace gbu {

unsigned __int128 factorial_exact(unsigned k) {
  if (k > 34) throw std::out_of_range("exact factorial limited to k <= 34");
  unsigned __int128 f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

long double moment_target(LadderIndex j, int n, MomentIndexing indexing) {
  if (n < 1 || n > kMaxMomentOrder) {
    throw std::out_of_range("moment order must lie in 1.." + std::to_string(kMaxMomentOrder));
  }
  const int order = indexing == MomentIndexing::Shifted ? n - 1 : n;
  // Gamma(3 order + j + 1) = (3 order + j)!
  return static_cast<long double>(factorial_exact(static_cast<unsigned>(3 * order + j.value())));
}

namespace {

void validate(std::span<const WeightSample> samples) {
  if (samples.size() < 2) throw InvalidMeasure("need at least two weight samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.x) || !std::isfinite(s.f)) throw InvalidMeasure("non-finite weight sample");
    if (s.x < 0.0) throw InvalidMeasure("weight samples need x >= 0");
    if (s.f < 0.0) throw InvalidMeasure("negative weight at x = " + std::to_string(s.x));
    if (i > 0 && !(s.x > samples[i - 1].x)) throw InvalidMeasure("x must be strictly increasing");
  }
}

}  // namespace

std::vector<MomentRow> moment_check(LadderIndex j, std::span<const WeightSample> samples, int n_max,
                                    double rel_tol, MomentIndexing indexing) {
  validate(samples);
  if (n_max < 1 || n_max > kMaxMomentOrder) {
    throw std::out_of_range("n_max must lie in 1.." + std::to_string(kMaxMomentOrder));
  }
  std::vector<MomentRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    auto integrand = [n](const WeightSample& s) { return std::pow(s.x, n - 1) * s.f; };
    CompensatedSum acc;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      acc += 0.5 * (samples[i].x - samples[i - 1].x) * (integrand(samples[i]) + integrand(samples[i - 1]));
    }
    const double computed = acc.value();
    const long double target = moment_target(j, n, indexing);
    const double rel = static_cast<double>(std::fabs((computed - target) / target));
    rows.push_back({n, computed, target, rel, rel <= rel_tol});
  }
  return rows;
}

std::vector<WeightSample> parse_weight_samples(std::istream& in) {
  std::vector<WeightSample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string sx, sf, extra;
    if (!(fields >> sx)) continue;
    if (!(fields >> sf)) throw ParseError(lineno, "expected two columns `x f`");
    if (fields >> extra) throw ParseError(lineno, "unexpected third column '" + extra + "'");
    WeightSample s{};
    try {
      std::size_t used = 0;
      s.x = std::stod(sx, &used);
      if (used != sx.size()) throw std::invalid_argument(sx);
      s.f = std::stod(sf, &used);
      if (used != sf.size()) throw std::invalid_argument(sf);
    } catch (const std::exception&) {
      throw ParseError(lineno, "not a number in '" + line + "'");
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace gbu
