#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pweave {

/// One row of the family tables. Integer columns are exact; reals are
/// printed at the precision of the published tables (6 decimals for
/// eigenvalue data, 3 for Cheeger bounds).
struct ReportRecord {
  int n = 0;
  bool exploratory = false;  // wiring is not the standard n-cycle
  int vertices = 0;
  int edges = 0;
  std::optional<int> degree;    // empty when irregular
  std::optional<int> girth;     // empty for forests
  std::optional<int> diameter;  // empty when disconnected
  std::optional<std::uint64_t> aut_order;
  double lambda2_abs = 0.0;
  double lambda2 = 0.0;
  double spectral_gap = 0.0;
  double cheeger_lower = 0.0;
  double cheeger_upper = 0.0;
  bool ramanujan = false;
  int distinct_eigs = 0;
  std::optional<bool> hamiltonian;  // empty on search timeout
  int chromatic_number = 0;
  bool three_colorable = false;
};

enum class ReportFormat { kCsv, kMarkdown, kJson };

ReportFormat parse_report_format(std::string_view name);

/// Deterministic text rendering; CSV and Markdown end every line with '\n'.
std::string emit_report(const std::vector<ReportRecord>& records, ReportFormat format);

}  // namespace pweave
