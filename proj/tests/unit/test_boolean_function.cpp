#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bentcay/boolean_function.hpp"
#include "bentcay/catalog.hpp"
#include "bentcay/errors.hpp"
#include "test_support.hpp"

namespace bentcay {
namespace {

using testing::random_function;
using testing::slow_walsh;

// Evaluates an ANF term by term.
bool eval_anf(const Anf& a, Point x) {
  bool acc = false;
  for (Point m : a.monomials) acc ^= (x & m) == m;
  return acc;
}

EgaElement random_ega(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Point> pick(0, (Point{1} << n) - 1);
  return {BitMatrix::random_invertible(static_cast<std::size_t>(n), rng), pick(rng), pick(rng), (rng() & 1U) != 0};
}

TEST(Anf, TruthTableToPolynomial) {
  const std::vector<int> values{1, 1, 1, 0};
  const Anf a = anf_of(BooleanFunction::from_values(2, values));
  EXPECT_EQ(a.monomials, (std::vector<Point>{0, 3}));
  for (Point x = 0; x < 4; ++x) EXPECT_EQ(eval_anf(a, x), values[x] == 1);
}

TEST(Anf, ZeroFunctionHasNoMonomials) {
  EXPECT_TRUE(anf_of(BooleanFunction(3)).monomials.empty());
  EXPECT_EQ(degree(BooleanFunction(3)), 0);
}

TEST(Anf, SingleProduct) {
  const BooleanFunction f = function_of(Anf{2, {3}});
  EXPECT_EQ(f.to_bit_string(), "0001");
}

TEST(Anf, RoundTripExhaustiveSmall) {
  for (int n = 1; n <= 3; ++n) {
    for (Point bits = 0; bits < (Point{1} << (1 << n)); ++bits) {
      const auto f = BooleanFunction::from_predicate(n, [bits](Point x) { return (bits >> x) & 1U; });
      const Anf a = anf_of(f);
      EXPECT_EQ(function_of(a), f);
      for (Point x = 0; x < f.size(); ++x) EXPECT_EQ(eval_anf(a, x), f(x));
    }
  }
}

TEST(Anf, RoundTripRandom) {
  std::mt19937_64 rng(1);
  for (int n = 4; n <= 8; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_function(n, rng);
      EXPECT_EQ(function_of(anf_of(f)), f);
    }
  }
}

TEST(Anf, MonomialOutsideRangeThrows) { EXPECT_THROW(function_of(Anf{2, {4}}), VariableOutOfRange); }

TEST(Degree, Examples) {
  EXPECT_EQ(degree(named_function("f2_1")), 2);
  EXPECT_EQ(degree(BooleanFunction::from_predicate(2, [](Point x) { return !(x & 1U); })), 1);
  EXPECT_EQ(degree(named_function("cast128_1_0")), 4);
}

TEST(Walsh, Examples) {
  EXPECT_EQ(walsh_hadamard(named_function("f2_1")).values, (std::vector<int32_t>{2, 2, 2, -2}));
  EXPECT_EQ(walsh_hadamard(BooleanFunction(2)).values, (std::vector<int32_t>{4, 0, 0, 0}));
  for (auto v : walsh_hadamard(named_function("f4_1")).values) EXPECT_EQ(std::abs(v), 4);
}

TEST(Walsh, MatchesDirectSummation) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 7; ++n) {
    const auto f = random_function(n, rng);
    const auto fast = walsh_hadamard(f).values;
    const auto slow = slow_walsh(f);
    EXPECT_TRUE(std::equal(fast.begin(), fast.end(), slow.begin()));
  }
}

TEST(Walsh, ParsevalAndParity) {
  std::mt19937_64 rng(3);
  for (int n : {2, 4, 6, 8}) {
    for (int t = 0; t < 50; ++t) {
      const auto w = walsh_hadamard(random_function(n, rng));
      std::int64_t sum = 0;
      for (auto v : w.values) {
        sum += std::int64_t{v} * v;
        EXPECT_EQ(v % 2, 0);
      }
      EXPECT_EQ(sum, std::int64_t{1} << (2 * n));
    }
  }
}

TEST(Bent, Examples) {
  EXPECT_TRUE(is_bent(named_function("f2_1")));
  EXPECT_FALSE(is_bent(BooleanFunction::from_predicate(2, [](Point x) { return x & 1U; })));
  EXPECT_FALSE(is_bent(BooleanFunction::from_predicate(3, [](Point x) { return (x & 3U) == 3U; })));
  for (const auto& entry : catalog()) EXPECT_TRUE(is_bent(named_function(entry.name))) << entry.name;
}

TEST(Weight, Examples) {
  const auto f = named_function("f2_1");
  EXPECT_EQ(f.weight(), 1U);
  EXPECT_EQ(f.support(), (std::vector<Point>{3}));
  EXPECT_EQ(named_function("f4_1").weight(), 6U);
  EXPECT_EQ(BooleanFunction(4).weight(), 0U);
}

TEST(WeightClass, Examples) {
  const auto f = named_function("f2_1");
  EXPECT_EQ(weight_class(f), 0);
  EXPECT_EQ(weight_class(f.plus_constant(true)), 1);
  EXPECT_EQ(weight_class(named_function("f4_1")), 0);
  EXPECT_THROW(weight_class(BooleanFunction(4)), NotBentWeight);
}

TEST(WeightClass, ClosedFormMatchesWeight) {
  for (const auto& entry : catalog()) {
    const auto f = named_function(entry.name);
    const int m = f.dimension() / 2;
    for (bool c : {false, true}) {
      const auto g = f.plus_constant(c);
      const std::size_t expected = (std::size_t{1} << m) * weight_class(g) + (std::size_t{1} << (2 * m - 1)) -
                                   (std::size_t{1} << (m - 1));
      EXPECT_EQ(g.weight(), expected) << entry.name;
    }
  }
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(named_function("f2_1")), named_function("f2_1"));
  EXPECT_EQ(dual(named_function("f8_1")), named_function("f8_1"));
  EXPECT_EQ(dual(dual(named_function("f6_2"))), named_function("f6_2"));
  EXPECT_THROW(dual(BooleanFunction(2)), NotBent);
}

TEST(Dual, AgreesWithWeightClassRoute) {
  for (const auto& entry : catalog()) {
    const auto f = named_function(entry.name);
    const auto d = dual(f);
    EXPECT_EQ(d, dual_via_weight_classes(f)) << entry.name;
    EXPECT_TRUE(is_bent(d));
    EXPECT_EQ(d(0), weight_class(f) != 0);
  }
}

TEST(Dual, LinearAndAffineTransport) {
  std::mt19937_64 rng(4);
  for (const char* name : {"f4_1", "f6_3", "f6_4", "f8_5"}) {
    const auto f = named_function(name);
    const int n = f.dimension();
    const auto d = dual(f);
    const auto a = BitMatrix::random_invertible(static_cast<std::size_t>(n), rng);
    const auto at_inv = a.transpose().inverse().value();
    const auto lhs = dual(BooleanFunction::from_predicate(n, [&](Point x) { return f(a.apply(x)); }));
    EXPECT_EQ(lhs, BooleanFunction::from_predicate(n, [&](Point x) { return d(at_inv.apply(x)); }));

    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(f.size() - 1));
    const Point b = pick(rng);
    const Point c = pick(rng);
    const auto shifted = dual(BooleanFunction::from_predicate(n, [&](Point x) { return f(x ^ b) ^ dot(c, x); }));
    EXPECT_EQ(shifted,
              BooleanFunction::from_predicate(n, [&](Point x) { return d(x ^ c) ^ dot(b, x) ^ dot(b, c); }));
  }
}

TEST(AffineCoset, MembersAreDistinct) {
  const auto f = named_function("f4_1");
  std::set<std::string> seen;
  for (Point c = 0; c < f.size(); ++c) {
    for (bool delta : {false, true}) seen.insert(f.plus_affine(c, delta).to_bit_string());
  }
  EXPECT_EQ(seen.size(), 2 * f.size());
}

TEST(Ega, IdentityAndTranslation) {
  const auto f = named_function("f4_1");
  EXPECT_EQ(apply_ega(f, EgaElement::identity(4)), f);
  const Point b = 5;
  const Point c = 9;
  const auto g = apply_ega(f, EgaElement::translation(4, b, c, f(b)));
  EXPECT_FALSE(g(0));
  for (Point x = 0; x < 16; ++x) EXPECT_EQ(g(x), f(x ^ b) ^ dot(c, x) ^ f(b));
}

TEST(Ega, DimensionMismatch) {
  EXPECT_THROW(apply_ega(named_function("f4_1"), EgaElement::identity(2)), DimensionMismatch);
  EXPECT_THROW(ega_compose(EgaElement::identity(2), EgaElement::identity(4)), DimensionMismatch);
}

TEST(Ega, ActionCompatibilityExhaustiveN2) {
  // All invertible 2x2 matrices.
  std::vector<BitMatrix> mats;
  for (Point bits = 0; bits < 16; ++bits) {
    BitMatrix m(2, 2);
    for (std::size_t k = 0; k < 4; ++k) m.set(k / 2, k % 2, (bits >> k) & 1U);
    if (m.is_invertible()) mats.push_back(m);
  }
  ASSERT_EQ(mats.size(), 6U);
  std::vector<EgaElement> group;
  for (const auto& m : mats) {
    for (Point b = 0; b < 4; ++b) {
      for (Point c = 0; c < 4; ++c) {
        for (bool d : {false, true}) group.push_back({m, b, c, d});
      }
    }
  }
  for (Point bits = 0; bits < 16; ++bits) {
    const auto f = BooleanFunction::from_predicate(2, [bits](Point x) { return (bits >> x) & 1U; });
    for (std::size_t i = 0; i < group.size(); i += 7) {
      for (std::size_t j = 0; j < group.size(); j += 5) {
        EXPECT_EQ(apply_ega(apply_ega(f, group[i]), group[j]), apply_ega(f, ega_compose(group[i], group[j])));
      }
    }
  }
}

TEST(Ega, GroupAxiomsRandom) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 6;
    const auto e1 = random_ega(n, rng);
    const auto e2 = random_ega(n, rng);
    const auto e3 = random_ega(n, rng);
    const auto left = ega_compose(ega_compose(e1, e2), e3);
    const auto right = ega_compose(e1, ega_compose(e2, e3));
    EXPECT_EQ(left.a, right.a);
    EXPECT_EQ(left.b, right.b);
    EXPECT_EQ(left.c, right.c);
    EXPECT_EQ(left.delta, right.delta);
    const auto same = ega_compose(e1, EgaElement::identity(n));
    EXPECT_EQ(same.a, e1.a);
    EXPECT_EQ(same.b, e1.b);
    EXPECT_EQ(same.c, e1.c);
    EXPECT_EQ(same.delta, e1.delta);
  }
}

TEST(Ega, BentnessIsInvariant) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto f = t % 2 ? named_function("f6_3") : random_function(6, rng);
    EXPECT_EQ(is_bent(apply_ega(f, random_ega(6, rng))), is_bent(f));
  }
}

}  // namespace
}  // namespace bentcay
