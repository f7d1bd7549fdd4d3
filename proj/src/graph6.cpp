#include "bentcay/graph6.hpp"

#include <vector>

#include "bentcay/errors.hpp"

namespace bentcay {

std::string graph6_encode(const DenseGraph& g) {
  const std::size_t v = g.order();
  if (v > kGraph6MaxOrder) throw TooLarge("graph6 supports at most 258047 vertices");
  std::string out;
  if (v <= 62) {
    out.push_back(static_cast<char>(63 + v));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((v >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((v >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (v & 63)));
  }
  const std::size_t bits = v * (v - (v > 0 ? 1 : 0)) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < v; ++j) {
    const auto& col = g.neighbours(j);
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (col.test(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

DenseGraph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6("empty string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw MalformedGraph6("byte outside 63..126");
  }
  std::size_t v = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    v = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) throw MalformedGraph6("truncated size field");
    if (text[1] == 126) throw MalformedGraph6("8-byte size field is not supported");
    v = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
    if (v <= 62) throw MalformedGraph6("non-minimal size field");
  }
  const std::size_t bits = v > 0 ? v * (v - 1) / 2 : 0;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw MalformedGraph6("expected " + std::to_string(expected) + " data bytes, got " +
                          std::to_string(text.size() - pos));
  }
  std::vector<BitVector> rows(v, BitVector(v));
  std::size_t k = 0;
  for (std::size_t j = 1; j < v; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw MalformedGraph6("nonzero padding bits");
  }
  return DenseGraph(std::move(rows));
}

}  // namespace bentcay
