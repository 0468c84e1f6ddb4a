#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pweave/graph.hpp"

namespace pweave {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kGraph6MaxVertices = 258047;

/// graph6 text for g in its own vertex order. Throws Graph6Error above
/// kGraph6MaxVertices.
std::string encode_graph6(const UGraph& g);

/// Strict inverse of encode_graph6: no trailing bytes, no stray padding bits,
/// every byte in 63..126.
UGraph decode_graph6(std::string_view text);

}  // namespace pweave
