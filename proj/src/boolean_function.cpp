#include "bentcay/boolean_function.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bentcay/errors.hpp"

namespace bentcay {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw DimensionMismatch("variable count must be in [1, " + std::to_string(kMaxVariables) + "], got " +
                            std::to_string(n));
  }
}

int half_dimension_or_throw(const BooleanFunction& f) {
  if (f.dimension() % 2 != 0) throw NotBent("not bent: odd dimension");
  return f.dimension() / 2;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_dimension(n);
  table_ = BitVector(std::size_t{1} << n);
}

BooleanFunction::BooleanFunction(int n, BitVector table) : n_(n), table_(std::move(table)) {
  check_dimension(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw DimensionMismatch("truth table length must be 2^n");
  }
}

BooleanFunction BooleanFunction::from_values(int n, std::span<const int> values) {
  BooleanFunction f(n);
  if (values.size() != f.size()) throw DimensionMismatch("truth table length must be 2^n");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] & 1) f.table_.set(i);
  }
  return f;
}

std::vector<Point> BooleanFunction::support() const {
  std::vector<Point> out;
  out.reserve(weight());
  for (std::size_t i = table_.find_first(); i < size(); i = table_.find_next_from(i + 1)) {
    out.push_back(static_cast<Point>(i));
  }
  return out;
}

std::string BooleanFunction::to_bit_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) {
    if (table_.test(i)) s[i] = '1';
  }
  return s;
}

BooleanFunction BooleanFunction::plus_constant(bool delta) const {
  if (!delta) return *this;
  return BooleanFunction(n_, ~table_);
}

BooleanFunction BooleanFunction::plus_affine(Point c, bool delta) const {
  BooleanFunction g(n_);
  for (Point x = 0; x < size(); ++x) {
    if (table_.test(x) ^ dot(c, x) ^ delta) g.table_.set(x);
  }
  return g;
}

BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n_ != g.n_) throw DimensionMismatch("sum of functions on different dimensions");
  return BooleanFunction(f.n_, f.table_ ^ g.table_);
}

int Anf::degree() const {
  int d = 0;
  for (Point m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

EgaElement EgaElement::identity(int n) { return {BitMatrix::identity(static_cast<std::size_t>(n)), 0, 0, false}; }

EgaElement EgaElement::translation(int n, Point b, Point c, bool delta) {
  return {BitMatrix::identity(static_cast<std::size_t>(n)), b, c, delta};
}

namespace {

// In-place binary Moebius transform on a 0/1 array; it is its own inverse.
void moebius(std::vector<std::uint8_t>& a, int n) {
  for (int i = 0; i < n; ++i) {
    const std::size_t step = std::size_t{1} << i;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & step) a[x] ^= a[x ^ step];
    }
  }
}

}  // namespace

Anf anf_of(const BooleanFunction& f) {
  std::vector<std::uint8_t> a(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) a[x] = f(static_cast<Point>(x)) ? 1 : 0;
  moebius(a, f.dimension());
  Anf out{f.dimension(), {}};
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m]) out.monomials.push_back(static_cast<Point>(m));
  }
  return out;
}

BooleanFunction function_of(const Anf& anf) {
  check_dimension(anf.n);
  const std::size_t size = std::size_t{1} << anf.n;
  std::vector<std::uint8_t> a(size, 0);
  for (Point m : anf.monomials) {
    if (m >= size) throw VariableOutOfRange("monomial uses a variable outside x0..x" + std::to_string(anf.n - 1));
    a[m] ^= 1;
  }
  moebius(a, anf.n);
  BitVector table(size);
  for (std::size_t x = 0; x < size; ++x) {
    if (a[x]) table.set(x);
  }
  return BooleanFunction(anf.n, std::move(table));
}

int degree(const BooleanFunction& f) { return anf_of(f).degree(); }

WalshSpectrum walsh_hadamard(const BooleanFunction& f) {
  WalshSpectrum w{f.dimension(), std::vector<std::int32_t>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x) w.values[x] = f(static_cast<Point>(x)) ? -1 : 1;
  for (std::size_t len = 1; len < f.size(); len <<= 1) {
    for (std::size_t i = 0; i < f.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int32_t u = w.values[j];
        const std::int32_t v = w.values[j + len];
        w.values[j] = u + v;
        w.values[j + len] = u - v;
      }
    }
  }
  return w;
}

bool is_bent(const BooleanFunction& f) {
  if (f.dimension() % 2 != 0) return false;
  const std::int32_t target = std::int32_t{1} << (f.dimension() / 2);
  const auto w = walsh_hadamard(f);
  return std::all_of(w.values.begin(), w.values.end(), [&](std::int32_t v) { return std::abs(v) == target; });
}

int weight_class(const BooleanFunction& f) {
  if (f.dimension() % 2 != 0) throw NotBentWeight("odd dimension has no bent weight");
  const int m = f.dimension() / 2;
  const auto weight = static_cast<std::int64_t>(f.weight());
  // weight_class = 2^{-m} weight - 2^{m-1} + 1/2, evaluated over the integers as
  // (2 weight - 2^{2m} + 2^m) / 2^{m+1}.
  const std::int64_t numerator = 2 * weight - (std::int64_t{1} << (2 * m)) + (std::int64_t{1} << m);
  const std::int64_t denominator = std::int64_t{1} << (m + 1);
  if (numerator % denominator != 0 || numerator / denominator < 0 || numerator / denominator > 1) {
    throw NotBentWeight("weight " + std::to_string(weight) + " is not a bent weight for n = " +
                        std::to_string(f.dimension()));
  }
  return static_cast<int>(numerator / denominator);
}

BooleanFunction dual(const BooleanFunction& f) {
  const int m = half_dimension_or_throw(f);
  const std::int32_t target = std::int32_t{1} << m;
  const auto w = walsh_hadamard(f);
  BitVector table(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (w.values[x] == -target) {
      table.set(x);
    } else if (w.values[x] != target) {
      throw NotBent();
    }
  }
  return BooleanFunction(f.dimension(), std::move(table));
}

BooleanFunction dual_via_weight_classes(const BooleanFunction& f) {
  half_dimension_or_throw(f);
  BitVector table(f.size());
  try {
    for (Point x = 0; x < f.size(); ++x) {
      if (weight_class(f.plus_affine(x, false)) == 1) table.set(x);
    }
  } catch (const NotBentWeight&) {
    throw NotBent();
  }
  return BooleanFunction(f.dimension(), std::move(table));
}

BooleanFunction apply_ega(const BooleanFunction& f, const EgaElement& e) {
  if (e.dimension() != f.dimension() || e.a.cols() != e.a.rows()) {
    throw DimensionMismatch("EGA element dimension does not match the function");
  }
  return BooleanFunction::from_predicate(f.dimension(), [&](Point x) {
    return f(e.a.apply(x) ^ e.b) ^ dot(e.c, x) ^ e.delta;
  });
}

EgaElement ega_compose(const EgaElement& e, const EgaElement& e2) {
  if (e.dimension() != e2.dimension()) throw DimensionMismatch("EGA elements of different dimension");
  return {e.a * e2.a, e.a.apply(e2.b) ^ e.b, e2.a.transpose().apply(e.c) ^ e2.c, static_cast<bool>(dot(e.c, e2.b) ^ e.delta ^ e2.delta)};
}

}  // namespace bentcay
