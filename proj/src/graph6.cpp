#include "pweave/graph6.hpp"

#include <vector>

namespace pweave {
namespace {

constexpr int kOffset = 63;

std::size_t body_bytes(std::size_t n) { return (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6; }

}  // namespace

std::string encode_graph6(const UGraph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw Graph6Error("graph6 supports at most " + std::to_string(kGraph6MaxVertices) + " vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
    }
  }
  // Upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

UGraph decode_graph6(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kOffset || c > 126) {
      throw Graph6Error("byte " + std::to_string(i) + " (value " + std::to_string(c) +
                        ") is outside 63..126");
    }
  }
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t n = 0;
  std::size_t header = 1;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<unsigned char>(text[0]) - kOffset;
  } else {
    if (text.size() < 4) throw Graph6Error("truncated size header");
    if (static_cast<unsigned char>(text[1]) == 126) {
      throw Graph6Error("graphs above " + std::to_string(kGraph6MaxVertices) + " vertices are not supported");
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (static_cast<unsigned char>(text[k]) - kOffset);
    header = 4;
  }

  const std::size_t expected = body_bytes(n);
  if (text.size() - header != expected) {
    throw Graph6Error("body has " + std::to_string(text.size() - header) + " bytes, expected " +
                      std::to_string(expected) + " for " + std::to_string(n) + " vertices");
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto bit_at = [&](std::size_t k) {
    const int byte = static_cast<unsigned char>(text[header + k / 6]) - kOffset;
    return (byte >> (5 - k % 6)) & 1;
  };
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (bit_at(bit)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; bit < expected * 6; ++bit) {
    if (bit_at(bit)) throw Graph6Error("non-zero padding bits");
  }
  return UGraph::from_edges(static_cast<int>(n), edges);
}

}  // namespace pweave
