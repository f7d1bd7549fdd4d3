#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "bentcay/archive.hpp"
#include "bentcay/catalog.hpp"
#include "bentcay/errors.hpp"
#include "bentcay/graph6.hpp"

namespace bentcay {
namespace {

const Classification& f21() {
  static const Classification cl = classify_et_class(named_function("f2_1"));
  return cl;
}

const char* const kF21Archive =
    "bentcay-classification\n"
    "version 1\n"
    "dim 2\n"
    "anf x0*x1\n"
    "graphs 2\n"
    "0 CK\n"
    "1 C~\n"
    "matrix bent_index 4 4\n"
    "0 0 0 1\n0 1 0 0\n0 0 1 0\n1 0 0 0\n"
    "matrix dual_index 4 4\n"
    "0 0 0 1\n0 1 0 0\n0 0 1 0\n1 0 0 0\n"
    "matrix wc 4 4\n"
    "0 0 0 1\n0 1 0 0\n0 0 1 0\n1 0 0 0\n"
    "end\n";

TEST(Archive, SerializesKnownText) {
  EXPECT_EQ(serialize_archive(f21()), kF21Archive);
  EXPECT_EQ(parse_archive(kF21Archive), f21());
}

TEST(Archive, RoundTripIsByteIdentical) {
  for (const char* name : {"f2_1", "f4_1"}) {
    const auto cl = classify_et_class(named_function(name));
    const auto text = serialize_archive(cl);
    EXPECT_EQ(parse_archive(text), cl);
    EXPECT_EQ(serialize_archive(parse_archive(text)), text);
  }
}

TEST(Archive, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "bentcay_test_archive.txt").string();
  save_archive(f21(), path);
  EXPECT_EQ(load_archive(path), f21());
  std::filesystem::remove(path);
  EXPECT_THROW(load_archive(path), MissingArchive);
}

TEST(Archive, RejectsMalformedText) {
  const std::string good = kF21Archive;
  auto broken = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_THROW(parse_archive(""), ParseError);
  EXPECT_THROW(parse_archive(broken("bentcay-classification", "something-else")), ParseError);
  EXPECT_THROW(parse_archive(broken("version 1", "version 9")), ParseError);
  EXPECT_THROW(parse_archive(broken("1 C~", "1 C")), ParseError);
  EXPECT_THROW(parse_archive(broken("matrix wc 4 4\n0 0 0 1", "matrix wc 4 4\n0 0 1")), ParseError);
  EXPECT_THROW(parse_archive(broken("matrix bent_index 4 4\n0 0 0 1", "matrix bent_index 4 4\n0 0 0 7")), ParseError);
  EXPECT_THROW(parse_archive(good.substr(0, good.size() - 4)), ParseError);
  try {
    parse_archive(broken("version 1", "version x"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(Pgm, EightBitWeightClasses) {
  const auto image = pgm_image(f21().wc_matrix);
  std::string expected = "P5\n4 4\n255\n";
  for (auto v : f21().wc_matrix.values) expected.push_back(static_cast<char>(v ? 255 : 0));
  EXPECT_EQ(image, expected);
}

TEST(Pgm, SixteenBitSamples) {
  IndexMatrix m(2);
  m.values = {0, 300, 150, 1};
  const auto image = pgm_image(m);
  const std::string header = "P5\n2 2\n65535\n";
  ASSERT_EQ(image.size(), header.size() + 8);
  EXPECT_EQ(image.substr(0, header.size()), header);
  auto sample = [&](std::size_t i) {
    return (static_cast<unsigned char>(image[header.size() + 2 * i]) << 8) |
           static_cast<unsigned char>(image[header.size() + 2 * i + 1]);
  };
  EXPECT_EQ(sample(0), 0);
  EXPECT_EQ(sample(1), 65535);
  EXPECT_EQ(sample(2), 32767);
  EXPECT_EQ(sample(3), 218);
}

TEST(Summary, CsvForDimensionTwo) {
  EXPECT_EQ(summary_csv(bent_class_descriptors(f21())),
            "class,v,k,lambda,mu,rank2,clique_poly,frequency\n"
            "0,4,1,0,0,4,1 4 2,12\n"
            "1,4,complete,,,4,1 4 6 4 1,4\n");
  const auto table = summary_table(bent_class_descriptors(f21()));
  EXPECT_NE(table.find("(4, 1, 0, 0)"), std::string::npos);
}

}  // namespace
}  // namespace bentcay
