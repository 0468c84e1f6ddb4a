#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pweave/report.hpp"
#include "pweave/spectral.hpp"

namespace pweave {

struct PaperTolerances {
  double lambda2 = 1e-5;
  double spectral_gap = 1e-5;
  double cheeger_bounds = 1e-3;
  double ramanujan_bound = 5e-7;
};

struct Table1Row {
  int n, vertices, edges, degree, girth, diameter;
  std::uint64_t aut_order;
};
struct Table2Row {
  int n;
  double lambda2_abs;
  bool ramanujan;
};
struct Table3Row {
  int n, distinct_eigs;
  bool strongly_regular;
};
struct Table4Row {
  int n;
  double spectral_gap, cheeger_lower, cheeger_upper;
};
struct Table5Row {
  int n;
  std::string sigma;
  int vertices, edges;
  std::uint64_t aut_order;
};

/// Published table values, loaded from the versioned fixture shipped in
/// data/paper_tables.json.
struct PaperFixture {
  int version = 0;
  PaperTolerances tolerances;
  double ramanujan_bound = 0.0;
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
  std::vector<Table3Row> table3;
  std::vector<Table4Row> table4;
  std::vector<Table5Row> table5;
  std::vector<double> lambda2_sequence;

  static PaperFixture parse(std::string_view json_text);
  /// The fixture embedded at build time.
  static const PaperFixture& builtin();

  const Table1Row* row1(int n) const;
  const Table2Row* row2(int n) const;
  const Table3Row* row3(int n) const;
  const Table4Row* row4(int n) const;
};

/// One compared cell. `where` names the table, row and column.
struct CheckResult {
  std::string where;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

/// Everything measured for one family member that the assertion layer needs.
struct Measurement {
  ReportRecord record;
  Spectrum spectrum;
  std::optional<bool> strongly_regular;
};

/// Compares a measured member against every fixture row for its n. Table 5
/// rows apply when their wiring matches; members with a non-cycle wiring
/// are compared against nothing else. Standard-wiring members without a table row are
/// compared against the closed forms (10n, 30n, 6, 4, floor(n/2)+2, 10n).
std::vector<CheckResult> check_against_paper(const Measurement& m, std::string_view sigma_text,
                                             const PaperFixture& fixture = PaperFixture::builtin());

std::string describe(const CheckResult& r);

}  // namespace pweave
