#include "hamcert/graph6.hpp"

#include <array>

namespace hamcert {

namespace {

constexpr int kOffset = 63;
constexpr int kLongFormMarker = 126;

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > 126) {
    throw Graph6Error("graph6 byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                      " outside [63,126]");
  }
  return c - kOffset;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 word");

  std::size_t pos = 0;
  long n = sextet(text, pos++);
  if (n == kLongFormMarker - kOffset) {
    if (text.size() < 4) throw Graph6Error("truncated graph6 order prefix");
    if (sextet(text, 1) == kLongFormMarker - kOffset) {
      throw Graph6Error("graph6 order above 64 is not supported");
    }
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
  }
  if (n < 1) throw Graph6Error("graph6 order 0 is not supported");
  if (n > Graph::kMaxOrder) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " above 64 is not supported");
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(body));
  }

  std::array<Row, Graph::kMaxOrder> rows{};
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= Row{1} << j;
        rows[j] |= Row{1} << i;
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text, pos + body - 1);
    if (last & ((1 << (6 - k % 6)) - 1)) throw Graph6Error("graph6 padding bits are not zero");
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(kLongFormMarker));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace hamcert
