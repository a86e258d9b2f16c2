#pragma once

// Command-line front end: the verify suite and the CSV emitters, callable
// in-process so tests can drive them without spawning the binary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbu/fock.hpp"

namespace gbu::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

/// Deliberate defects for exercising failure paths. Each verify fault breaks
/// the computation behind exactly one check; SpotCheck only affects density.
enum class Fault {
  None,
  PivSign,
  PivPerturb,
  Algebra,
  Eigen,
  Stats,
  Evolution,
  Triangle,
  DualPath,
  Period,
  SpotCheck,
};

std::string_view fault_name(Fault f) noexcept;
std::optional<Fault> parse_fault(std::string_view name) noexcept;
/// Name of the verify check the fault targets; empty for SpotCheck and None.
std::string_view fault_target(Fault f) noexcept;
std::vector<Fault> verify_faults();

struct CheckResult {
  std::string name;
  bool pass;
  double measured;
  /// Upper bound on `measured`, or a lower bound when `must_exceed` is set.
  double threshold;
  bool must_exceed = false;
  std::string detail;
};

struct VerifyOptions {
  Fault fault = Fault::None;
  /// Replaces the automatic truncation in the eigenstate check.
  std::optional<std::size_t> truncation;
  /// Restricts the eigenstate check to this eigenvalue.
  std::optional<cplx> alpha;
  std::optional<LadderIndex> j;
  std::uint64_t seed = 20240607;
};

std::vector<CheckResult> run_checks(const VerifyOptions& options);

/// Runs one command line (without the program name). Returns an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbu::cli
