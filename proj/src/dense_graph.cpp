#include "bentcay/dense_graph.hpp"

#include <stdexcept>

#include "bentcay/bit_matrix.hpp"
#include "bentcay/errors.hpp"

namespace bentcay {

DenseGraph::DenseGraph(std::size_t v) : rows_(v, BitVector(v)) {}

DenseGraph::DenseGraph(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  const std::size_t v = rows_.size();
  for (std::size_t i = 0; i < v; ++i) {
    if (rows_[i].size() != v) throw std::invalid_argument("adjacency row length differs from vertex count");
    if (rows_[i].test(i)) throw std::invalid_argument("graph has a loop at vertex " + std::to_string(i));
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = rows_[i].find_first(); j < v; j = rows_[i].find_next_from(j + 1)) {
      if (!rows_[j].test(i)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
}

DenseGraph DenseGraph::from_edges(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<BitVector> rows(v, BitVector(v));
  for (auto [i, j] : edges) {
    if (i >= v || j >= v) throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    rows[i].set(j);
    rows[j].set(i);
  }
  return DenseGraph(std::move(rows), Unchecked{});
}

DenseGraph DenseGraph::complete(std::size_t v) {
  std::vector<BitVector> rows(v, BitVector(v));
  for (std::size_t i = 0; i < v; ++i) {
    rows[i].set_all();
    rows[i].reset(i);
  }
  return DenseGraph(std::move(rows), Unchecked{});
}

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

DenseGraph DenseGraph::relabeled(const std::vector<std::size_t>& labeling) const {
  const std::size_t v = order();
  if (labeling.size() != v) throw std::invalid_argument("labeling size differs from vertex count");
  std::vector<std::size_t> position(v, v);
  for (std::size_t p = 0; p < v; ++p) {
    if (labeling[p] >= v || position[labeling[p]] != v) throw std::invalid_argument("labeling is not a permutation");
    position[labeling[p]] = p;
  }
  std::vector<BitVector> rows(v, BitVector(v));
  for (std::size_t p = 0; p < v; ++p) {
    const auto& src = rows_[labeling[p]];
    for (std::size_t j = src.find_first(); j < v; j = src.find_next_from(j + 1)) rows[p].set(position[j]);
  }
  return DenseGraph(std::move(rows), Unchecked{});
}

std::string CliquePolynomial::to_string() const {
  std::string s;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    if (coeffs[d] == 0) continue;
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += std::to_string(coeffs[d]);
    } else {
      if (coeffs[d] != 1) s += std::to_string(coeffs[d]);
      s += "t";
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

DenseGraph cayley_graph(const BooleanFunction& f) {
  if (f(0)) throw NonzeroAtOrigin();
  const std::size_t v = f.size();
  const auto& table = f.table();
  std::vector<BitVector> rows(v, BitVector(v));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t d = table.find_first(); d < v; d = table.find_next_from(d + 1)) rows[i].set(i ^ d);
  }
  return DenseGraph(std::move(rows), DenseGraph::Unchecked{});
}

std::optional<SrgParams> srg_params(const DenseGraph& g) {
  const std::size_t v = g.order();
  if (v == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < v; ++i) {
    if (g.degree(i) != k) return std::nullopt;
  }
  if (k == 0 || k == v - 1) return std::nullopt;

  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t common = g.neighbours(i).and_count(g.neighbours(j));
      auto& slot = g.adjacent(i, j) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return SrgParams{v, k, *lambda, *mu};
}

namespace {

// Adds the cliques that extend the current clique (of size `size`) by vertices of `candidates`.
void count_cliques(const DenseGraph& g, const BitVector& candidates, std::size_t size,
                   std::vector<std::uint64_t>& coeffs) {
  if (coeffs.size() <= size + 1) coeffs.resize(size + 2, 0);
  const auto words = candidates.words();
  for (std::size_t wi = words.size(); wi-- > 0;) {
    auto w = words[wi];
    while (w != 0) {
      const int top = 63 - std::countl_zero(w);
      w &= ~(BitVector::Word{1} << top);
      const std::size_t vertex = wi * BitVector::kWordBits + static_cast<std::size_t>(top);
      ++coeffs[size + 1];
      // Extend only by lower-indexed vertices so each clique is generated once.
      BitVector next = candidates & g.neighbours(vertex);
      auto next_words = next.words();
      for (std::size_t k = wi + 1; k < next_words.size(); ++k) next_words[k] = 0;
      next_words[wi] &= (BitVector::Word{1} << top) - 1;
      if (next.any()) count_cliques(g, next, size + 1, coeffs);
    }
  }
}

}  // namespace

CliquePolynomial clique_polynomial(const DenseGraph& g) {
  CliquePolynomial p{{1}};
  BitVector all(g.order());
  all.set_all();
  if (g.order() > 0) count_cliques(g, all, 0, p.coeffs);
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

std::size_t rank2(const DenseGraph& g) { return gf2_rank(g.rows()); }

}  // namespace bentcay
