#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bentcay/boolean_function.hpp"

namespace bentcay {

// ANF text: terms joined by '+', products by '*', variables x0..x{n-1}, optional
// constant 1 (a 0 term contributes nothing). Whitespace is ignored. Repeated terms cancel.
// Throws ParseError or VariableOutOfRange.
Anf parse_anf_text(std::string_view text, int n);
BooleanFunction parse_anf(std::string_view text, int n);

// Monomials in descending lexicographic order of their exponent vectors
// (x0 most significant), constant last; "0" for the zero function.
std::string render_anf(const Anf& anf);
inline std::string render_anf(const BooleanFunction& f) { return render_anf(anf_of(f)); }

inline constexpr std::size_t kSboxCount = 8;
inline constexpr std::size_t kSboxEntries = 256;

// The eight CAST-128 substitution boxes S1..S8.
using Cast128Sboxes = std::array<std::vector<std::uint32_t>, kSboxCount>;

// Accepts RFC 2144 text (tables introduced by "S-Box S<k>" headings) or a bare
// whitespace-separated list of 2048 hex words. A data line is one whose first token is
// an 8-digit hex word; every token on a data line must be one.
// Throws ParseError (with line/column) and CountError.
Cast128Sboxes parse_cast128_sboxes(std::string_view text);

// f(i) = bit `bit` (coefficient of 2^bit) of entry i of box `box` (1-based). Throws RangeError.
BooleanFunction sbox_bit_function(const Cast128Sboxes& boxes, int box, int bit);

}  // namespace bentcay
