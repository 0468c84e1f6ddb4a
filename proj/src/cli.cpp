#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/ostream.h>

#include "pweave/workflow.hpp"

namespace pweave {
namespace {

struct Flags {
  std::string n = "3";
  std::string format = "markdown";
  std::string out_path;
  std::string input_path;
};

void add_tolerances(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--eig-tol", cfg.eig_tol, "tolerance for excluding +-degree from the spectrum");
  cmd->add_option("--target-accuracy", cfg.target_accuracy, "maximum eigenpair residual");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Flags flags;
  CLI::App app{"Build and measure woven Petersen graphs"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "write graph6 lines for each requested n");
  construct->add_option("--n", flags.n, "copy count N or range A..B")->required();
  construct->add_option("--sigma", cfg.sigma, "copy wiring in cycle notation, e.g. \"(1 2)\"");
  construct->add_option("--out", flags.out_path, "output file (default stdout)");

  auto* report = app.add_subcommand("report", "measure invariants and emit tables");
  report->add_option("--n", flags.n, "copy count N or range A..B")->required();
  report->add_option("--sigma", cfg.sigma, "copy wiring in cycle notation");
  add_tolerances(report, cfg);
  report->add_option("--cluster-tol", cfg.cluster_tol, "tolerance for merging eigenvalues");
  report->add_option("--aut-budget", cfg.aut_budget, "automorphism search node budget");
  report->add_option("--ham-budget", cfg.ham_budget, "Hamiltonian search node budget");
  report->add_option("--format", flags.format, "csv, markdown or json");
  report->add_option("--out", flags.out_path, "output file (default stdout)");
  report->add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  report->add_flag("--assert-paper", cfg.assert_paper, "compare against the published tables");

  auto* verify = app.add_subcommand("verify", "identify graph6 lines as family members");
  verify->add_option("input", flags.input_path, "graph6 file, one graph per line")->required();
  verify->add_option("--sigma", cfg.sigma, "compare against this wiring instead of the n-cycle");
  verify->add_option("--aut-budget", cfg.aut_budget, "isomorphism search node budget");
  verify->add_option("--out", flags.out_path, "output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "second eigenvalue trend for n = 3..n-max");
  scan->add_option("--n-max", cfg.n_max, "largest copy count")->required();
  add_tolerances(scan, cfg);
  scan->add_option("--format", flags.format, "csv, markdown or json");
  scan->add_option("--out", flags.out_path, "output file (default stdout)");
  scan->add_flag("--assert-paper", cfg.assert_paper, "compare against the published trend");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }

  std::ostringstream product;
  int status = kExitOk;
  try {
    cfg.n = parse_n_range(flags.n);
    cfg.format = parse_report_format(flags.format);
    if (*construct) {
      status = cmd_construct(cfg, product, err);
    } else if (*report) {
      status = cmd_report(cfg, product, err);
    } else if (*verify) {
      std::ifstream in(flags.input_path);
      if (!in) {
        fmt::print(err, "error: cannot read {}\n", flags.input_path);
        return kExitUsage;
      }
      status = cmd_verify(cfg, in, product, err);
    } else {
      status = cmd_scan(cfg, product, err);
    }
  } catch (const SearchBudgetExceeded& e) {
    fmt::print(err, "budget exceeded: {}\n", e.what());
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitAssertion;
  }

  if (flags.out_path.empty()) {
    out << product.str();
  } else {
    std::ofstream file(flags.out_path, std::ios::binary);
    file << product.str();
    if (!file.flush()) {
      fmt::print(err, "error: cannot write {}\n", flags.out_path);
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace pweave
