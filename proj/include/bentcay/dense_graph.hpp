#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bentcay/bit_vector.hpp"
#include "bentcay/boolean_function.hpp"

namespace bentcay {

// Undirected simple graph with adjacency stored as bit rows.
class DenseGraph {
 public:
  DenseGraph() = default;
  // Edgeless graph on v vertices.
  explicit DenseGraph(std::size_t v);
  // Validates symmetry and the absence of loops; throws std::invalid_argument.
  explicit DenseGraph(std::vector<BitVector> rows);

  static DenseGraph from_edges(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static DenseGraph complete(std::size_t v);

  std::size_t order() const { return rows_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const BitVector& neighbours(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVector>& rows() const { return rows_; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }
  std::size_t edge_count() const;

  // Graph h with h(p, q) = g(labeling[p], labeling[q]); labeling must be a permutation.
  DenseGraph relabeled(const std::vector<std::size_t>& labeling) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  struct Unchecked {};
  DenseGraph(std::vector<BitVector> rows, Unchecked) : rows_(std::move(rows)) {}

  std::vector<BitVector> rows_;

  friend DenseGraph cayley_graph(const BooleanFunction& f);
};

struct SrgParams {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

// coeffs[s] = number of complete subgraphs on s vertices (coeffs[0] = 1).
struct CliquePolynomial {
  std::vector<std::uint64_t> coeffs;

  // "2t^2 + 4t + 1", highest degree first.
  std::string to_string() const;
  friend bool operator==(const CliquePolynomial&, const CliquePolynomial&) = default;
  friend auto operator<=>(const CliquePolynomial&, const CliquePolynomial&) = default;
};

// Edge (i, j) iff f(i xor j) = 1. Throws NonzeroAtOrigin when f(0) = 1.
DenseGraph cayley_graph(const BooleanFunction& f);

// Parameters when g is strongly regular; nullopt otherwise and for complete or edgeless graphs.
std::optional<SrgParams> srg_params(const DenseGraph& g);

CliquePolynomial clique_polynomial(const DenseGraph& g);

// Rank of the adjacency matrix over GF(2).
std::size_t rank2(const DenseGraph& g);

}  // namespace bentcay
