#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bentcay/canonical.hpp"
#include "bentcay/catalog.hpp"
#include "bentcay/dense_graph.hpp"
#include "bentcay/equivalence.hpp"
#include "bentcay/errors.hpp"
#include "bentcay/graph6.hpp"
#include "bentcay/sequences.hpp"
#include "test_support.hpp"

namespace bentcay {
namespace {

DenseGraph random_graph(std::size_t v, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return DenseGraph::from_edges(v, edges);
}

std::vector<std::size_t> random_permutation(std::size_t v, std::mt19937_64& rng) {
  std::vector<std::size_t> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

bool brute_isomorphic(const DenseGraph& g, const DenseGraph& h) {
  if (g.order() != h.order()) return false;
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (h.relabeled(p) == g) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<std::uint64_t> brute_cliques(const DenseGraph& g) {
  const std::size_t v = g.order();
  std::vector<std::uint64_t> counts(v + 1, 0);
  for (std::uint32_t s = 0; s < (1U << v); ++s) {
    bool clique = true;
    for (std::size_t i = 0; i < v && clique; ++i) {
      for (std::size_t j = i + 1; j < v && clique; ++j) {
        if (((s >> i) & 1U) && ((s >> j) & 1U) && !g.adjacent(i, j)) clique = false;
      }
    }
    if (clique) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

TEST(Cayley, Examples) {
  const auto g = cayley_graph(named_function("f2_1"));
  EXPECT_EQ(g, DenseGraph::from_edges(4, {{0, 3}, {1, 2}}));
  EXPECT_EQ(cayley_graph(BooleanFunction(2)).edge_count(), 0U);
  const auto k4 = cayley_graph(et_member(named_function("f2_1"), 0, 3));
  EXPECT_EQ(k4, DenseGraph::complete(4));
  EXPECT_THROW(cayley_graph(named_function("f2_1").plus_constant(true)), NonzeroAtOrigin);
}

TEST(Cayley, DegreeEqualsWeight) {
  const auto f = named_function("f6_3");
  const auto g = cayley_graph(f);
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.degree(i), f.weight());
}

TEST(Srg, Examples) {
  EXPECT_EQ(srg_params(cayley_graph(named_function("f2_1"))), (SrgParams{4, 1, 0, 0}));
  EXPECT_EQ(srg_params(cayley_graph(named_function("f4_1"))), (SrgParams{16, 6, 2, 2}));
  EXPECT_FALSE(srg_params(DenseGraph::complete(4)).has_value());
  EXPECT_FALSE(srg_params(DenseGraph(5)).has_value());
  EXPECT_FALSE(srg_params(DenseGraph::from_edges(3, {{0, 1}})).has_value());
}

// Bent iff Cay(f) is strongly regular with lambda = mu, apart from two degenerate graphs:
// K_4 (bent, but complete) and perfect matchings on more than 4 vertices (lambda = mu = 0).
bool srg_lambda_equals_mu(const BooleanFunction& f) {
  const auto g = cayley_graph(f);
  if (g.order() == 4 && g == DenseGraph::complete(4)) return true;
  const auto p = srg_params(g);
  return p && p->lambda == p->mu && (p->mu > 0 || p->v == 4);
}

TEST(Srg, BentIffLambdaEqualsMuExhaustiveN2) {
  for (Point bits = 0; bits < 16; bits += 2) {
    const auto f = BooleanFunction::from_predicate(2, [bits](Point x) { return (bits >> x) & 1U; });
    EXPECT_EQ(is_bent(f), srg_lambda_equals_mu(f)) << bits;
  }
}

TEST(Srg, DegenerateCases) {
  EXPECT_FALSE(srg_params(cayley_graph(et_member(named_function("f2_1"), 0, 3))).has_value());
  const auto matching = BooleanFunction::from_predicate(4, [](Point x) { return x == 5; });
  EXPECT_FALSE(is_bent(matching));
  EXPECT_EQ(srg_params(cayley_graph(matching)), (SrgParams{16, 1, 0, 0}));
}

TEST(Srg, BentIffLambdaEqualsMuRandomN4) {
  std::mt19937_64 rng(21);
  int bent = 0;
  for (int t = 0; t < 1000; ++t) {
    auto f = testing::random_function(4, rng);
    f = f.plus_constant(f(0));
    EXPECT_EQ(is_bent(f), srg_lambda_equals_mu(f));
    bent += is_bent(f) ? 1 : 0;
  }
  EXPECT_GT(bent, 0);
}

TEST(Srg, CountingIdentity) {
  for (const char* name : {"f4_1", "f6_2", "f6_4"}) {
    const auto p = srg_params(cayley_graph(named_function(name))).value();
    EXPECT_EQ(p.k * (p.k - p.lambda - 1), (p.v - p.k - 1) * p.mu);
  }
}

TEST(CliquePolynomial, Examples) {
  EXPECT_EQ(clique_polynomial(cayley_graph(named_function("f2_1"))).to_string(), "2t^2 + 4t + 1");
  EXPECT_EQ(clique_polynomial(DenseGraph::complete(4)).to_string(), "t^4 + 4t^3 + 6t^2 + 4t + 1");
  EXPECT_EQ(clique_polynomial(cayley_graph(named_function("f4_1"))).to_string(), "8t^4 + 32t^3 + 48t^2 + 16t + 1");
  EXPECT_EQ(clique_polynomial(DenseGraph()).coeffs, (std::vector<std::uint64_t>{1}));
}

TEST(CliquePolynomial, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(12, 0.2 + 0.02 * t, rng);
    EXPECT_EQ(clique_polynomial(g).coeffs, brute_cliques(g));
  }
}

TEST(CliquePolynomial, SrgCoefficients) {
  for (const char* name : {"f4_1", "f6_1", "f6_3"}) {
    const auto g = cayley_graph(named_function(name));
    const auto p = srg_params(g).value();
    const auto c = clique_polynomial(g).coeffs;
    EXPECT_EQ(c[0], 1U);
    EXPECT_EQ(c[1], p.v);
    EXPECT_EQ(c[2], p.k * p.v / 2);
    EXPECT_EQ(c[3], p.v * p.k * p.lambda / 6);
  }
}

TEST(Rank2, Examples) {
  EXPECT_EQ(rank2(cayley_graph(named_function("f2_1"))), 4U);
  EXPECT_EQ(rank2(cayley_graph(named_function("f4_1"))), 6U);
  EXPECT_EQ(rank2(cayley_graph(named_function("f6_4"))), 14U);
  EXPECT_EQ(rank2(DenseGraph(3)), 0U);
}

TEST(Graph6, HandPackedExamples) {
  EXPECT_EQ(graph6_encode(DenseGraph::complete(2)), "A_");
  EXPECT_EQ(graph6_encode(DenseGraph(2)), "A?");
  EXPECT_EQ(graph6_decode("A_"), DenseGraph::complete(2));
  EXPECT_EQ(graph6_decode("A_\n"), DenseGraph::complete(2));
}

TEST(Graph6, LongSizeField) {
  const auto s = graph6_encode(DenseGraph(63));
  EXPECT_EQ(s.substr(0, 4), std::string("~??~"));
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(23);
  for (std::size_t v = 0; v <= 300; v += (v < 70 ? 1 : 23)) {
    const auto g = random_graph(v, 0.3, rng);
    const auto s = graph6_encode(g);
    EXPECT_EQ(graph6_decode(s), g) << v;
    EXPECT_EQ(graph6_encode(graph6_decode(s)), s);
  }
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(graph6_decode(""), MalformedGraph6);
  EXPECT_THROW(graph6_decode("A"), MalformedGraph6);
  EXPECT_THROW(graph6_decode("A_?"), MalformedGraph6);
  EXPECT_THROW(graph6_decode("A "), MalformedGraph6);
  EXPECT_THROW(graph6_decode("Aa"), MalformedGraph6);  // nonzero padding
}

TEST(DenseGraph, RejectsBadRows) {
  std::vector<BitVector> rows(2, BitVector(2));
  rows[0].set(1);
  EXPECT_THROW(DenseGraph{rows}, std::invalid_argument);
  rows[1].set(1);
  EXPECT_THROW(DenseGraph{rows}, std::invalid_argument);
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 300; ++t) {
    const std::size_t v = 3 + static_cast<std::size_t>(t % 5);
    const auto g = random_graph(v, 0.5, rng);
    const auto h = t % 3 == 0 ? g.relabeled(random_permutation(v, rng)) : random_graph(v, 0.5, rng);
    EXPECT_EQ(is_isomorphic(g, h), brute_isomorphic(g, h));
  }
}

TEST(Canonical, PermutationInvarianceRandom64) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_graph(64, 0.5, rng);
    const auto form = canonical_form(g);
    for (int r = 0; r < 5; ++r) EXPECT_EQ(canonical_form(g.relabeled(random_permutation(64, rng))).g6, form.g6);
  }
}

TEST(Canonical, CertifyingLabeling) {
  std::mt19937_64 rng(26);
  for (const char* name : {"f6_2", "f6_3", "f8_4"}) {
    const auto g = cayley_graph(named_function(name));
    const auto h = g.relabeled(random_permutation(g.order(), rng));
    const auto form = canonical_form(h);
    EXPECT_EQ(h.relabeled(form.labeling), form.graph);
    EXPECT_EQ(graph6_encode(form.graph), form.g6);
    EXPECT_EQ(form.g6, canonical_form(g).g6);
  }
}

TEST(Canonical, SeedsDoNotChangeTheResult) {
  for (const char* name : {"f4_1", "f6_1", "f6_4"}) {
    const auto f = named_function(name);
    const auto g = cayley_graph(f);
    const auto seeds = translation_automorphisms(f.dimension());
    EXPECT_EQ(canonical_form(g, seeds).g6, canonical_form(g).g6);
  }
}

TEST(Canonical, RejectsBogusSeed) {
  const auto g = cayley_graph(named_function("f4_1"));
  Permutation p(16);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[0], p[1]);
  std::swap(p[0], p[5]);
  const std::vector<Permutation> seeds{p};
  if (!is_automorphism(g, p)) {
    EXPECT_THROW(canonical_form(g, seeds), std::invalid_argument);
  }
}

TEST(Canonical, HardRegularFamilies) {
  // Strongly regular Cayley graphs relabeled at random keep their canonical string.
  std::mt19937_64 rng(27);
  for (const auto& f : {named_function("f6_1"), named_function("f6_3"), sigma(3), tau(3)}) {
    const auto g = cayley_graph(f);
    const auto form = canonical_form(g).g6;
    for (int r = 0; r < 3; ++r) EXPECT_EQ(canonical_form(g.relabeled(random_permutation(64, rng))).g6, form);
  }
}

TEST(Canonical, Examples) {
  const auto f61 = cayley_graph(named_function("f6_1"));
  const auto f62 = cayley_graph(named_function("f6_2"));
  EXPECT_TRUE(is_isomorphic(f61, f62));
  EXPECT_FALSE(is_isomorphic(DenseGraph::from_edges(4, {{0, 3}, {1, 2}}), DenseGraph::complete(4)));
  const auto f41 = named_function("f4_1");
  EXPECT_FALSE(is_isomorphic(cayley_graph(f41), cayley_graph(et_member(f41, 0, 3))));
}

}  // namespace
}  // namespace bentcay
