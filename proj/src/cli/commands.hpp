#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "gbu/cli.hpp"
#include "gbu/painleve.hpp"
#include "gbu/wavepacket.hpp"

namespace gbu::cli {

/// Input rejected after parsing (bad ranges, unreadable files).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UncertaintyOptions {
  double abs_min = 0.0;
  double abs_max = 10.0;
  double abs_step = 0.05;
  std::optional<LadderIndex> j;
  std::filesystem::path out = "uncertainty.csv";
};

struct PivOptions {
  double y_min = -10.0;
  double y_max = 10.0;
  std::size_t y_steps = 2001;
  double delta = kDefaultExclusion;
  std::filesystem::path out = "piv.csv";
};

struct DensityOptions {
  std::optional<LadderIndex> j;
  cplx z = 2.0;
  GridSpec grid;
  std::filesystem::path out = "density.csv";
  Fault fault = Fault::None;
};

struct DecomposeOptions {
  LadderIndex j{0};
  cplx z = 2.0;
  std::size_t truncation = 0;
  std::filesystem::path out = "decompose.csv";
};

struct MomentsOptions {
  LadderIndex j{0};
  int n_max = 10;
  std::filesystem::path samples;
  std::filesystem::path out = "moments.csv";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out);
int cmd_uncertainty(const UncertaintyOptions& o, std::ostream& out);
int cmd_piv(const PivOptions& o, std::ostream& out);
int cmd_density(const DensityOptions& o, std::ostream& out, std::ostream& err);
int cmd_decompose(const DecomposeOptions& o, std::ostream& out);
int cmd_moments(const MomentsOptions& o, std::ostream& out);

}  // namespace gbu::cli
