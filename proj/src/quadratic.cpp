#include "bentcay/quadratic.hpp"

#include <map>

#include "bentcay/equivalence.hpp"
#include "bentcay/errors.hpp"

namespace bentcay {

namespace {

void check_order(int m) {
  if (m < 1 || 2 * m > kMaxVariables) throw DimensionMismatch("quadratic order m must be in 1..12");
}

bool q_at(int m, Point x) {
  const Point low = x & ((Point{1} << m) - 1);
  return std::popcount(low & (x >> m)) & 1;
}

Point pair_vector(int m, int k) { return (Point{1} << k) | (Point{1} << (m + k)); }

// Swaps coordinate pairs (0, l) and (m, m + l); preserves q.
BitMatrix pair_swap(int m, int l) {
  std::vector<std::size_t> image(static_cast<std::size_t>(2 * m));
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = k;
  std::swap(image[0], image[static_cast<std::size_t>(l)]);
  std::swap(image[static_cast<std::size_t>(m)], image[static_cast<std::size_t>(m + l)]);
  return BitMatrix::permutation(image);
}

// B with (q + <e^(0), .>)(B x) = q(x) + <c, x>, for q(c) = 1.
BitMatrix normal_form(int m, Point c) {
  int l = 0;
  while (!((c >> l) & (c >> (m + l)) & 1U)) ++l;
  const QuadraticWitness w = gl_witness_q0(m, c ^ pair_vector(m, l));
  return pair_swap(m, l) * w.a;
}

// x^T M x over GF(2).
bool quadratic_value(const BitMatrix& mat, Point x) {
  bool acc = false;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    if ((x >> i) & 1U) acc ^= dot(static_cast<Point>(mat.row(i).words()[0]), x);
  }
  return acc;
}

}  // namespace

BooleanFunction canonical_quadratic(int m) {
  check_order(m);
  return BooleanFunction::from_predicate(2 * m, [m](Point x) { return q_at(m, x); });
}

Point reduce_translation(const BooleanFunction& q, Point b, Point c) {
  const int n = q.dimension();
  if (n % 2 != 0 || n == 0) throw DimensionMismatch("canonical quadratic needs an even variable count");
  const int m = n / 2;
  if (q != canonical_quadratic(m)) throw DimensionMismatch("function is not the canonical quadratic");
  if (b >= q.size() || c >= q.size()) throw DimensionMismatch("vector has too many bits");
  const Point half = (Point{1} << m) - 1;
  // (L + L^T) b swaps the two halves of b.
  return c ^ ((b >> m) | ((b & half) << m));
}

QuadraticWitness gl_witness_q0(int m, Point c) {
  check_order(m);
  const int n = 2 * m;
  if (c >> n) throw DimensionMismatch("vector has too many bits");
  if (q_at(m, c)) throw WrongParity("q(c) = 1; expected q(c) = 0");

  std::vector<int> k_set;
  for (int k = 0; k < m; ++k) {
    if ((c >> k) & (c >> (m + k)) & 1U) k_set.push_back(k);
  }
  BitMatrix a = BitMatrix::identity(static_cast<std::size_t>(n));
  const auto at = [](int i) { return static_cast<std::size_t>(i); };
  // Upper-right block T + C11, lower-left block T + C00.
  for (std::size_t p = 0; p + 1 < k_set.size(); p += 2) {
    const int k1 = k_set[p];
    const int k2 = k_set[p + 1];
    a.set(at(k1), at(m + k2), true);
    a.set(at(k2), at(m + k1), true);
    a.set(at(m + k1), at(k2), true);
    a.set(at(m + k2), at(k1), true);
  }
  for (int k = 0; k < m; ++k) {
    if ((c >> (m + k)) & 1U) a.set(at(k), at(m + k), true);
    if ((c >> k) & 1U) a.set(at(m + k), at(k), true);
  }
  return {a, c};
}

BitMatrix gl_witness_q1(int m, Point c, Point c2) {
  check_order(m);
  if ((c | c2) >> (2 * m)) throw DimensionMismatch("vector has too many bits");
  if (!q_at(m, c) || !q_at(m, c2)) throw WrongParity("expected q(c) = q(c') = 1");
  // h0 = q + <e^(0), .>; h0(B_c x) = q(x) + <c, x>, so M = B_c^{-1} B_{c2}.
  const BitMatrix from = normal_form(m, c);
  const BitMatrix to = normal_form(m, c2);
  return *from.inverse() * to;
}

bool validate_witness(int m, const BitMatrix& a, Point c_in, Point c_out, std::mt19937_64& rng) {
  check_order(m);
  const auto n = static_cast<std::size_t>(2 * m);
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch("witness matrix has the wrong size");
  if (!a.is_invertible()) return false;
  BitMatrix form(n, n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) form.set(k, m + k, true);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        form.set(i, j, !form.get(i, j));
        form.set(j, i, !form.get(j, i));
      }
    }
  }
  for (Point x = 0; x < (Point{1} << n); ++x) {
    const Point y = a.apply(x);
    if ((quadratic_value(form, y) ^ dot(c_in, y)) != (q_at(m, x) ^ dot(c_out, x))) return false;
  }
  return true;
}

bool verify_quadratic_theorem(int m, unsigned workers) {
  const Classification cl = classify_et_class(canonical_quadratic(m), workers);
  if (bent_class_count(cl) != 2) return false;
  std::map<std::uint32_t, std::uint32_t> label;
  for (std::size_t i = 0; i < cl.bent_index.values.size(); ++i) {
    const auto [it, inserted] = label.try_emplace(cl.bent_index.values[i], cl.wc_matrix.values[i]);
    if (!inserted && it->second != cl.wc_matrix.values[i]) return false;
  }
  return label.size() == 2 && label.begin()->second != std::next(label.begin())->second;
}

}  // namespace bentcay
