#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bentcay/bit_vector.hpp"

namespace bentcay {

// Dense matrix over GF(2) stored as bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  explicit BitMatrix(std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);
  // Matrix P with P e_k = e_{image[k]}, i.e. (P x)_{image[k]} = x_k.
  static BitMatrix permutation(const std::vector<std::size_t>& image);
  // Uniformly random invertible n x n matrix (rejection sampling).
  static BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].assign(c, value); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }

  // y = M x for x packed as a Point (requires cols <= 32).
  Point apply(Point x) const;

  BitMatrix transpose() const;
  std::size_t rank() const;
  bool is_invertible() const { return rows() == cols() && rank() == rows(); }
  // Inverse of a square matrix; nullopt when singular.
  std::optional<BitMatrix> inverse() const;

  // Row-reduced basis of the row space (reduced row echelon form, zero rows dropped).
  std::vector<BitVector> row_echelon_basis() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  // Rows of 0/1 characters separated by '/', e.g. "10/11".
  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Rank of a list of equal-length bit rows over GF(2).
std::size_t gf2_rank(std::vector<BitVector> rows);

}  // namespace bentcay
