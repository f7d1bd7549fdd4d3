#include "bentcay/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "bentcay/errors.hpp"

namespace bentcay {

namespace {

class AnfParser {
 public:
  AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

  Anf parse() {
    std::set<Point> terms;
    skip_space();
    if (at_end()) fail("empty expression");
    while (true) {
      const auto [present, monomial] = parse_term();
      if (present) {
        // x + x = 0 over GF(2).
        if (!terms.erase(monomial)) terms.insert(monomial);
      }
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
      skip_space();
    }
    return Anf{n_, {terms.begin(), terms.end()}};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  // Returns {false, _} for a term that multiplies to zero.
  std::pair<bool, Point> parse_term() {
    bool present = true;
    Point monomial = 0;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a variable or constant");
      const char ch = text_[pos_];
      if (ch == 'x' || ch == 'X') {
        const std::size_t start = pos_++;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected variable index");
        long index = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + (text_[pos_] - '0');
          if (index > 1000000) fail_at("variable index too large", start);
          ++pos_;
        }
        if (index >= n_) {
          throw VariableOutOfRange("variable x" + std::to_string(index) + " outside x0..x" + std::to_string(n_ - 1));
        }
        monomial |= Point{1} << index;
      } else if (ch == '1') {
        ++pos_;
      } else if (ch == '0') {
        ++pos_;
        present = false;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_space();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return {present, monomial};
    }
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

bool is_hex_token(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isxdigit(static_cast<unsigned char>(c)) != 0;
  });
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Box number from an "S-Box S<k>" heading, or 0.
int heading_box(std::string_view line) {
  const auto at = line.find("S-Box S");
  if (at == std::string_view::npos) return 0;
  const std::size_t digit = at + 7;
  if (digit >= line.size() || !std::isdigit(static_cast<unsigned char>(line[digit]))) return 0;
  return line[digit] - '0';
}

}  // namespace

Anf parse_anf_text(std::string_view text, int n) {
  if (n < 1 || n > kMaxVariables) throw DimensionMismatch("variable count out of range");
  return AnfParser(text, n).parse();
}

BooleanFunction parse_anf(std::string_view text, int n) { return function_of(parse_anf_text(text, n)); }

std::string render_anf(const Anf& anf) {
  std::vector<Point> monomials = anf.monomials;
  std::sort(monomials.begin(), monomials.end(), [](Point a, Point b) {
    const Point diff = a ^ b;
    if (diff == 0) return false;
    const Point low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  std::string out;
  for (Point m : monomials) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int k = 0; k < anf.n; ++k) {
      if (!((m >> k) & 1U)) continue;
      if (!first) out += "*";
      out += "x" + std::to_string(k);
      first = false;
    }
  }
  return out.empty() ? "0" : out;
}

Cast128Sboxes parse_cast128_sboxes(std::string_view text) {
  Cast128Sboxes boxes;
  std::vector<std::uint32_t> bare;
  int current = 0;
  bool saw_heading = false;
  std::size_t line_number = 0;
  std::size_t first_bare_line = 0;

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(begin, end - begin);
    ++line_number;
    begin = end + 1;

    if (const int box = heading_box(line); box != 0) {
      if (box < 1 || box > static_cast<int>(kSboxCount)) throw ParseError("S-box number out of range", line_number, 1);
      current = box;
      saw_heading = true;
      continue;
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const bool data_line =
        (tokens.front().text.size() == 8 && is_hex_token(tokens.front().text)) ||
        std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return is_hex_token(t.text); });
    if (!data_line) continue;
    for (const auto& t : tokens) {
      if (t.text.size() != 8 || !is_hex_token(t.text)) {
        throw ParseError("expected an 8-digit hex word, got '" + std::string(t.text) + "'", line_number, t.column);
      }
      const auto value = static_cast<std::uint32_t>(std::stoul(std::string(t.text), nullptr, 16));
      if (current == 0) {
        if (bare.empty()) first_bare_line = line_number;
        bare.push_back(value);
      } else {
        boxes[static_cast<std::size_t>(current - 1)].push_back(value);
      }
    }
  }

  if (saw_heading) {
    if (!bare.empty()) throw ParseError("hex data before the first S-box heading", first_bare_line, 1);
  } else {
    if (bare.size() != kSboxCount * kSboxEntries) {
      throw CountError("expected " + std::to_string(kSboxCount * kSboxEntries) + " hex words, got " +
                       std::to_string(bare.size()));
    }
    for (std::size_t k = 0; k < kSboxCount; ++k) {
      boxes[k].assign(bare.begin() + static_cast<std::ptrdiff_t>(k * kSboxEntries),
                      bare.begin() + static_cast<std::ptrdiff_t>((k + 1) * kSboxEntries));
    }
  }
  for (std::size_t k = 0; k < kSboxCount; ++k) {
    if (boxes[k].size() != kSboxEntries) {
      throw CountError("S-box S" + std::to_string(k + 1) + " has " + std::to_string(boxes[k].size()) +
                       " entries, expected 256");
    }
  }
  return boxes;
}

BooleanFunction sbox_bit_function(const Cast128Sboxes& boxes, int box, int bit) {
  if (box < 1 || box > static_cast<int>(kSboxCount)) throw RangeError("S-box number must be in 1..8");
  if (bit < 0 || bit > 31) throw RangeError("bit index must be in 0..31");
  const auto& table = boxes[static_cast<std::size_t>(box - 1)];
  if (table.size() != kSboxEntries) throw CountError("S-box table must have 256 entries");
  return BooleanFunction::from_predicate(8, [&](Point x) { return ((table[x] >> bit) & 1U) != 0; });
}

}  // namespace bentcay
