#include "pweave/report.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace pweave {
namespace {

struct Column {
  const char* name;
  std::string (*text)(const ReportRecord&);
};

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? fmt::format("{}", *v) : std::string{};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

const std::vector<Column>& columns() {
  static const std::vector<Column> cols{
      {"n", [](const ReportRecord& r) { return fmt::format("{}", r.n); }},
      {"exploratory", [](const ReportRecord& r) { return yes_no(r.exploratory); }},
      {"vertices", [](const ReportRecord& r) { return fmt::format("{}", r.vertices); }},
      {"edges", [](const ReportRecord& r) { return fmt::format("{}", r.edges); }},
      {"degree", [](const ReportRecord& r) { return opt(r.degree); }},
      {"girth", [](const ReportRecord& r) { return opt(r.girth); }},
      {"diameter", [](const ReportRecord& r) { return opt(r.diameter); }},
      {"aut_order", [](const ReportRecord& r) { return opt(r.aut_order); }},
      {"lambda2_abs", [](const ReportRecord& r) { return fmt::format("{:.6f}", r.lambda2_abs); }},
      {"lambda2", [](const ReportRecord& r) { return fmt::format("{:.6f}", r.lambda2); }},
      {"ramanujan", [](const ReportRecord& r) { return yes_no(r.ramanujan); }},
      {"distinct_eigs", [](const ReportRecord& r) { return fmt::format("{}", r.distinct_eigs); }},
      {"spectral_gap", [](const ReportRecord& r) { return fmt::format("{:.6f}", r.spectral_gap); }},
      {"cheeger_lower", [](const ReportRecord& r) { return fmt::format("{:.3f}", r.cheeger_lower); }},
      {"cheeger_upper", [](const ReportRecord& r) { return fmt::format("{:.3f}", r.cheeger_upper); }},
      {"hamiltonian",
       [](const ReportRecord& r) { return r.hamiltonian ? yes_no(*r.hamiltonian) : std::string("timeout"); }},
      {"chromatic_number", [](const ReportRecord& r) { return fmt::format("{}", r.chromatic_number); }},
      {"three_colorable", [](const ReportRecord& r) { return yes_no(r.three_colorable); }},
  };
  return cols;
}

double rounded(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  if (name == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::string emit_report(const std::vector<ReportRecord>& records, ReportFormat format) {
  std::string out;
  switch (format) {
    case ReportFormat::kCsv: {
      for (std::size_t i = 0; i < columns().size(); ++i) {
        out += (i ? "," : "") + std::string(columns()[i].name);
      }
      out += '\n';
      for (const auto& r : records) {
        for (std::size_t i = 0; i < columns().size(); ++i) out += (i ? "," : "") + columns()[i].text(r);
        out += '\n';
      }
      break;
    }
    case ReportFormat::kMarkdown: {
      out += "|";
      for (const auto& c : columns()) out += fmt::format(" {} |", c.name);
      out += "\n|";
      for (std::size_t i = 0; i < columns().size(); ++i) out += "---|";
      out += '\n';
      for (const auto& r : records) {
        out += "|";
        for (const auto& c : columns()) out += fmt::format(" {} |", c.text(r));
        out += '\n';
      }
      break;
    }
    case ReportFormat::kJson: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["n"] = r.n;
        o["exploratory"] = r.exploratory;
        o["vertices"] = r.vertices;
        o["edges"] = r.edges;
        o["degree"] = opt_json(r.degree);
        o["girth"] = opt_json(r.girth);
        o["diameter"] = opt_json(r.diameter);
        o["aut_order"] = opt_json(r.aut_order);
        o["lambda2_abs"] = rounded(r.lambda2_abs, 6);
        o["lambda2"] = rounded(r.lambda2, 6);
        o["ramanujan"] = r.ramanujan;
        o["distinct_eigs"] = r.distinct_eigs;
        o["spectral_gap"] = rounded(r.spectral_gap, 6);
        o["cheeger_lower"] = rounded(r.cheeger_lower, 3);
        o["cheeger_upper"] = rounded(r.cheeger_upper, 3);
        o["hamiltonian"] = opt_json(r.hamiltonian);
        o["chromatic_number"] = r.chromatic_number;
        o["three_colorable"] = r.three_colorable;
        arr.push_back(std::move(o));
      }
      out = arr.dump(2) + "\n";
      break;
    }
  }
  return out;
}

}  // namespace pweave
