#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "corpus.hpp"
#include "pweave/graph6.hpp"
#include "pweave/report.hpp"
#include "pweave/weave.hpp"

using namespace pweave;

namespace {

// Reference encoder written straight from the format description: a bit
// string over the upper triangle in column order, cut into 6-bit groups.
std::string reference_encode(const UGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  for (std::size_t k = 0; k < bits.size(); k += 6) out += static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
  return out;
}

}  // namespace

TEST(Graph6, Examples) {
  EXPECT_EQ(encode_graph6(complete_graph(1)), "@");
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(decode_graph6("@").vertex_count(), 1);
  EXPECT_TRUE(decode_graph6("Bw").same_adjacency(complete_graph(3)));
  EXPECT_EQ(encode_graph6(empty_graph(0)), "?");

  const std::string g7 = encode_graph6(build(WeaveSpec::cycle(7)));
  ASSERT_GE(g7.size(), 4u);
  EXPECT_EQ(static_cast<unsigned char>(g7[0]), 126);
  EXPECT_EQ(g7.substr(1, 3), std::string({static_cast<char>(63), static_cast<char>(64), static_cast<char>(69)}));
  EXPECT_EQ(g7.size(), 4u + (70 * 69 / 2 + 5) / 6);
}

TEST(Graph6, MatchesReferenceEncoder) {
  for (const auto& [name, g] : pweave::testing::corpus()) EXPECT_EQ(encode_graph6(g), reference_encode(g)) << name;
}

TEST(Graph6, RoundTripCorpus) {
  for (const auto& [name, g] : pweave::testing::corpus()) {
    const std::string s = encode_graph6(g);
    for (char ch : s) {
      EXPECT_GE(static_cast<unsigned char>(ch), 63);
      EXPECT_LE(static_cast<unsigned char>(ch), 126);
    }
    const int n = g.vertex_count();
    const std::size_t header = n <= 62 ? 1 : 4;
    EXPECT_EQ(s.size() - header, (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6) << name;
    EXPECT_TRUE(decode_graph6(s).same_adjacency(g)) << name;
  }
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> size(0, 80);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const UGraph g = pweave::testing::random_graph(size(rng), density(rng), rng);
    EXPECT_TRUE(decode_graph6(encode_graph6(g)).same_adjacency(g)) << i;
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("Bw "), Graph6Error);   // out-of-range byte
  EXPECT_THROW(decode_graph6("Bww"), Graph6Error);   // trailing byte
  EXPECT_THROW(decode_graph6("B"), Graph6Error);     // missing body
  EXPECT_THROW(decode_graph6("Bx"), Graph6Error);    // padding bit set
  EXPECT_THROW(decode_graph6("~?@"), Graph6Error);   // truncated long header
  EXPECT_THROW(decode_graph6("~~???"), Graph6Error);  // 36-bit header unsupported
}

// Every single-byte change either fails to decode or gives another graph.
TEST(Graph6, SingleByteCorruption) {
  std::vector<UGraph> samples{complete_graph(3), petersen(), build(WeaveSpec::cycle(3)),
                              build(WeaveSpec::cycle(7))};
  for (const auto& g : samples) {
    const std::string s = encode_graph6(g);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int b = 0; b < 256; ++b) {
        if (b == static_cast<unsigned char>(s[i])) continue;
        std::string t = s;
        t[i] = static_cast<char>(b);
        try {
          const UGraph h = decode_graph6(t);
          EXPECT_FALSE(h.vertex_count() == g.vertex_count() && h.same_adjacency(g)) << i << " " << b;
        } catch (const Graph6Error&) {
        }
      }
    }
  }
}

namespace {

ReportRecord sample(int n, double l2) {
  ReportRecord r;
  r.n = n;
  r.vertices = 10 * n;
  r.edges = 30 * n;
  r.degree = 6;
  r.girth = 4;
  r.diameter = n / 2 + 2;
  r.aut_order = 10 * n;
  r.lambda2_abs = l2;
  r.lambda2 = l2;
  r.spectral_gap = 6 - l2;
  r.cheeger_lower = (6 - l2) / 2;
  r.cheeger_upper = std::sqrt(12 * (6 - l2));
  r.ramanujan = l2 <= 2 * std::sqrt(5.0);
  r.distinct_eigs = 12;
  r.hamiltonian = true;
  r.chromatic_number = 3;
  r.three_colorable = true;
  return r;
}

}  // namespace

TEST(Report, EmptyCsvIsHeaderOnly) {
  const std::string csv = emit_report({}, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
  EXPECT_EQ(csv.rfind("n,", 0), 0u);
}

TEST(Report, JsonFieldsAndRounding) {
  const auto j = nlohmann::json::parse(emit_report({sample(4, 4.0776835374)}, ReportFormat::kJson));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_DOUBLE_EQ(j[0]["lambda2_abs"].get<double>(), 4.077684);
  EXPECT_DOUBLE_EQ(j[0]["cheeger_lower"].get<double>(), 0.961);
  EXPECT_EQ(j[0]["aut_order"], 40);
  for (const char* key : {"n", "vertices", "edges", "degree", "girth", "diameter", "aut_order", "lambda2_abs",
                          "cheeger_lower", "cheeger_upper", "ramanujan", "distinct_eigs", "hamiltonian",
                          "three_colorable"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
}

TEST(Report, MarkdownAndCsvShapes) {
  std::vector<ReportRecord> rows;
  for (int n = 3; n <= 7; ++n) rows.push_back(sample(n, 4.0 + 0.1 * n));
  const std::string md = emit_report(rows, ReportFormat::kMarkdown);
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 7);
  EXPECT_NE(md.find("| 5 | false | 50 | 150 | 6 | 4 | 4 | 50 |"), std::string::npos);
  const std::string csv = emit_report(rows, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_EQ(emit_report(rows, ReportFormat::kCsv), csv);  // deterministic

  auto timed_out = sample(3, 3.0);
  timed_out.hamiltonian.reset();
  EXPECT_NE(emit_report({timed_out}, ReportFormat::kCsv).find("timeout"), std::string::npos);
}

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_report_format("md"), ReportFormat::kMarkdown);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}
