#include "bentcay/bit_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "bentcay/errors.hpp"

namespace bentcay {

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
  return m;
}

BitMatrix BitMatrix::permutation(const std::vector<std::size_t>& image) {
  const std::size_t n = image.size();
  BitMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.rows_[image[k]].set(k);
  return m;
}

BitMatrix BitMatrix::random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, coin(rng));
    }
    if (m.is_invertible()) return m;
  }
}

Point BitMatrix::apply(Point x) const {
  if (cols_ > 32) throw DimensionMismatch("apply() needs at most 32 columns");
  Point y = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto row_bits = static_cast<Point>(rows_[r].words().empty() ? 0 : rows_[r].words()[0]);
    if (dot(row_bits, x)) y |= Point{1} << r;
  }
  return y;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = rows_[r].find_first(); c < cols_; c = rows_[r].find_next_from(c + 1)) {
      t.rows_[c].set(r);
    }
  }
  return t;
}

std::size_t gf2_rank(std::vector<BitVector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r].test(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::size_t BitMatrix::rank() const { return gf2_rank(rows_); }

std::vector<BitVector> BitMatrix::row_echelon_basis() const {
  std::vector<BitVector> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows() != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = cols_;
  std::vector<BitVector> a = rows_;
  std::vector<BitVector> inv = identity(n).rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].test(col)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].test(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return BitMatrix(std::move(inv));
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& row = a.row(r);
    for (std::size_t k = row.find_first(); k < a.cols(); k = row.find_next_from(k + 1)) {
      out.rows_[r] ^= b.row(k);
    }
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  BitMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] ^= b.row(r);
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r != 0) s.push_back('/');
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
  }
  return s;
}

}  // namespace bentcay
