#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bentcay/bit_matrix.hpp"
#include "bentcay/bit_vector.hpp"
#include "bentcay/boolean_function.hpp"
#include "bentcay/dense_graph.hpp"

namespace bentcay {

struct BinaryLinearCode {
  std::size_t length = 0;
  std::vector<BitVector> gen_rows;
  std::size_t dimension = 0;

  BinaryLinearCode() = default;
  BinaryLinearCode(std::size_t length, std::vector<BitVector> rows);
};

using WeightDistribution = std::map<std::size_t, std::uint64_t>;

// Generator rows are the n coordinate rows of Y, whose columns are the support points of f
// in ascending order. Throws RangeError for the zero function.
BinaryLinearCode code_of(const BooleanFunction& f);

// Throws TooLarge when the dimension exceeds 24.
WeightDistribution weight_distribution(const BinaryLinearCode& code);

// Smallest nonzero weight, or 0 for the zero code.
std::size_t minimum_distance(const WeightDistribution& distribution);

bool is_projective(const BinaryLinearCode& code);

// Vertices x in F_2^n carry codewords x^T Y; two are adjacent when their codewords differ in
// 2^{2m-2} - 2^{m-1} places (weight class 0) or 2^{2m-2} + 2^{m-1} places (weight class 1).
// Throws NotBent.
DenseGraph graph_R(const BooleanFunction& f);

// Rows are blocks, columns are points.
struct BlockDesign {
  BitMatrix incidence;
};

// incidence[c][x] = f(x) + <c, x> + dual(f)(c). Throws NotBent.
BlockDesign sdp_design(const BooleanFunction& f);

// Every symmetric difference of three blocks is a block or a block complement.
// Throws TooLarge for more than 64 blocks.
bool has_sdp_property(const BlockDesign& d);

// The design rows are exactly the minimum-weight words of span(f, RM(1, n)).
// Throws TooLarge for n > 6 and NotBent.
bool min_weight_rows_check(const BooleanFunction& f);

}  // namespace bentcay
