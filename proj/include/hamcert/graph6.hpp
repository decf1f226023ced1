#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hamcert/graph.hpp"

namespace hamcert {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 word (no trailing newline). Supports the one-byte
/// order prefix (n <= 62) and the four-byte form ('~' + 3 bytes) for
/// 63 <= n <= 64. Anything else throws Graph6Error.
Graph graph6_decode(std::string_view text);

/// Canonical graph6 word for g under its current labeling.
std::string graph6_encode(const Graph& g);

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace hamcert
