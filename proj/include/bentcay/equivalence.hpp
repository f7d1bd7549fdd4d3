#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentcay/bit_matrix.hpp"
#include "bentcay/boolean_function.hpp"
#include "bentcay/canonical.hpp"
#include "bentcay/dense_graph.hpp"

namespace bentcay {

// Square matrix of class indices (or weight-class bits), row-major.
struct IndexMatrix {
  std::size_t side = 0;
  std::vector<std::uint32_t> values;

  IndexMatrix() = default;
  explicit IndexMatrix(std::size_t s) : side(s), values(s * s, 0) {}

  std::uint32_t at(std::size_t row, std::size_t col) const { return values[row * side + col]; }
  std::uint32_t& at(std::size_t row, std::size_t col) { return values[row * side + col]; }
  friend bool operator==(const IndexMatrix&, const IndexMatrix&) = default;
};

// Extended Cayley census of one extended translation class. Rows are indexed by c, columns by b.
struct Classification {
  std::string anf;
  int n = 0;
  std::vector<std::string> graphs;  // canonical graph6 strings
  IndexMatrix bent_index;           // class of Cay(g_{b,c})
  IndexMatrix dual_index;           // class of Cay(dual(g_{b,c}) + weight_class(g_{b,c}))
  IndexMatrix wc_matrix;            // weight_class(g_{b,c})

  friend bool operator==(const Classification&, const Classification&) = default;
};

// g_{b,c}(x) = f(x + b) + <c, x> + f(b).
BooleanFunction et_member(const BooleanFunction& f, Point b, Point c);

// Translations x -> x + e_k, which are automorphisms of every Cayley graph on F_2^n.
std::vector<Permutation> translation_automorphisms(int n);

// Canonical graph6 of Cay(f); f(0) must be 0.
std::string cayley_certificate(const BooleanFunction& f);

// Pairs are visited with c outer and b inner; class indices follow first occurrence in that
// order, so the result does not depend on `workers`. Throws NotBent.
Classification classify_et_class(const BooleanFunction& f, unsigned workers = 1);

BitMatrix weight_class_matrix(const BooleanFunction& f);
// Entry (c, b) = f(b) + <c, b> + dual(f)(c).
BitMatrix dillon_schatz_matrix(const BooleanFunction& f);

// Throws NonzeroAtOrigin.
bool is_cayley_equivalent(const BooleanFunction& f, const BooleanFunction& g);
// Compares Cay(f + f(0)) with Cay(g + g(0)).
bool is_extended_cayley_equivalent(const BooleanFunction& f, const BooleanFunction& g);

// x -> f(A x). Throws SingularMatrix or DimensionMismatch.
BooleanFunction apply_linear(const BooleanFunction& f, const BitMatrix& a);

// f(A x + b) + <c, x> + delta == g(A x) with g(x) = f(x + b) + <(A^{-1})^T c, x> + delta.
struct AffineSplit {
  BooleanFunction g;
  BitMatrix a;
};
AffineSplit affine_to_translation(const BooleanFunction& f, const BitMatrix& a, Point b, Point c, bool delta);

// Every (b, c) pair gives its own bent class.
bool is_prolific(const Classification& cl);

struct ClassDescriptor {
  std::size_t index = 0;
  std::string g6;
  std::optional<SrgParams> params;  // nullopt for complete or edgeless graphs
  bool complete = false;
  std::size_t rank2 = 0;
  CliquePolynomial clique;
  std::size_t bent_frequency = 0;
  std::size_t dual_frequency = 0;
};

// Classes referenced by bent_index, in index order.
std::vector<ClassDescriptor> bent_class_descriptors(const Classification& cl);
// Classes referenced only by dual_index.
std::vector<ClassDescriptor> dual_only_class_descriptors(const Classification& cl);
std::size_t bent_class_count(const Classification& cl);

}  // namespace bentcay
