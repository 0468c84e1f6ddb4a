#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pweave/classify.hpp"
#include "pweave/paper_check.hpp"
#include "pweave/report.hpp"
#include "pweave/spectral.hpp"
#include "pweave/symmetry.hpp"
#include "pweave/weave.hpp"

namespace pweave {

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive range of copy counts, written "5" or "3..7".
struct NRange {
  int first = 3;
  int last = 3;
  friend bool operator==(const NRange&, const NRange&) = default;
};

NRange parse_n_range(std::string_view text);

struct RunConfig {
  NRange n;
  int n_max = 7;
  std::string sigma;  // cycle notation; empty means the standard n-cycle
  double eig_tol = kDefaultEigTol;
  double cluster_tol = kDefaultClusterTol;
  double target_accuracy = kDefaultTargetAccuracy;
  std::uint64_t aut_budget = SearchOptions{}.node_budget;
  std::uint64_t ham_budget = kDefaultHamiltonBudget;
  ReportFormat format = ReportFormat::kMarkdown;
  bool assert_paper = false;
  unsigned jobs = 0;  // 0: one worker per hardware thread

  /// Throws UsageError on n < 2, a sigma given for more than one n,
  /// non-positive tolerances or zero budgets.
  void validate() const;
  WeaveSpec spec_for(int n) const;
};

/// Builds one member and measures every reported invariant. Throws
/// SearchBudgetExceeded when the automorphism search runs out.
Measurement measure(const WeaveSpec& spec, const RunConfig& cfg);

/// Measurements for every n in cfg.n, ordered by n. Work for different n
/// runs concurrently; an error is rethrown with the failing n in its message.
std::vector<Measurement> measure_range(const RunConfig& cfg);

// Subcommands. `out` receives the deterministic product, `diag` receives
// progress and assertion messages. Each returns an ExitCode.
int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& diag);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

std::string emit_scan(const std::vector<ScanRow>& rows, ReportFormat format);

/// Full command line entry point: parses flags and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pweave
