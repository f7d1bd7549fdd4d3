#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bentcay/catalog.hpp"
#include "bentcay/errors.hpp"
#include "bentcay/ingest.hpp"
#include "test_support.hpp"

namespace bentcay {
namespace {

std::string fixture() {
  std::ifstream in(std::string(BENTCAY_TEST_DATA_DIR) + "/cast128_sboxes.txt");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ParseAnf, Examples) {
  EXPECT_EQ(parse_anf("x0*x1", 2), named_function("f2_1"));
  EXPECT_EQ(parse_anf("x0*x1 + x2*x3 + x4*x5", 6).to_bit_string(), named_function("f6_1").to_bit_string());
  EXPECT_THROW(parse_anf("x9", 4), VariableOutOfRange);
  EXPECT_EQ(parse_anf(" x1 *x0+1 ", 2).to_bit_string(), "1110");
  EXPECT_EQ(parse_anf("x0 + x0", 2), BooleanFunction(2));
  EXPECT_EQ(parse_anf("0", 3), BooleanFunction(3));
  EXPECT_EQ(parse_anf("x0*x0", 1).to_bit_string(), "01");
}

TEST(ParseAnf, ErrorPositions) {
  try {
    parse_anf("x0*x1 +\n x2 ? x3", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 5U);
  }
  EXPECT_THROW(parse_anf("", 2), ParseError);
  EXPECT_THROW(parse_anf("x0 +", 2), ParseError);
  EXPECT_THROW(parse_anf("x", 2), ParseError);
  EXPECT_THROW(parse_anf("y1", 2), ParseError);
}

TEST(RenderAnf, OrderAndRoundTrip) {
  EXPECT_EQ(render_anf(parse_anf("1 + x1 + x0*x2 + x0", 3)), "x0*x2 + x0 + x1 + 1");
  EXPECT_EQ(render_anf(BooleanFunction(2)), "0");
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto f = testing::random_function(n, rng);
      EXPECT_EQ(parse_anf(render_anf(f), n), f);
    }
  }
}

TEST(Cast128, ParsesFixture) {
  const auto boxes = parse_cast128_sboxes(fixture());
  for (const auto& b : boxes) EXPECT_EQ(b.size(), 256U);
  EXPECT_EQ(boxes[0][0], 0x30fb40d4U);
  EXPECT_EQ(boxes[7][255], 0xea8bf59eU);
}

TEST(Cast128, BitFunctions) {
  const auto boxes = parse_cast128_sboxes(fixture());
  const auto f = sbox_bit_function(boxes, 1, 0);
  EXPECT_EQ(render_anf(f), named("cast128_1_0").anf);
  EXPECT_EQ(degree(f), 4);
  for (int box = 1; box <= 8; ++box) {
    for (int bit = 0; bit < 32; ++bit) {
      const auto g = sbox_bit_function(boxes, box, bit);
      EXPECT_TRUE(is_bent(g));
      EXPECT_TRUE(g.weight() == 120 || g.weight() == 136);
    }
  }
  EXPECT_THROW(sbox_bit_function(boxes, 0, 0), RangeError);
  EXPECT_THROW(sbox_bit_function(boxes, 1, 32), RangeError);
}

TEST(Cast128, BareList) {
  const auto boxes = parse_cast128_sboxes(fixture());
  std::string bare;
  for (const auto& b : boxes) {
    for (auto v : b) {
      char buf[10];
      std::snprintf(buf, sizeof buf, "%08x ", v);
      bare += buf;
    }
    bare += '\n';
  }
  EXPECT_EQ(parse_cast128_sboxes(bare), boxes);
}

TEST(Cast128, Truncated) {
  std::string text = fixture();
  const auto cut = text.rfind("\n      ");
  text.erase(cut);
  EXPECT_THROW(parse_cast128_sboxes(text), CountError);
  EXPECT_THROW(parse_cast128_sboxes("30fb40d4 9fa0ff0b\n"), CountError);
}

TEST(Cast128, MalformedToken) {
  std::string text = fixture();
  const auto at = text.find("9fa0ff0b");
  text.replace(at, 8, "9fa0ff0");
  const std::size_t line = static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(at), '\n')) + 1;
  const std::size_t column = at - text.rfind('\n', at);
  try {
    parse_cast128_sboxes(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line);
    EXPECT_EQ(e.column(), column);
  }
  EXPECT_THROW(parse_cast128_sboxes("30fb40d4 zz\n"), ParseError);
}

}  // namespace
}  // namespace bentcay
