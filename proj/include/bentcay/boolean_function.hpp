#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bentcay/bit_matrix.hpp"
#include "bentcay/bit_vector.hpp"

namespace bentcay {

inline constexpr int kMaxVariables = 24;

// Truth table of f : F_2^n -> F_2. Entry i holds f(x) where x_k is bit k of i.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  // The zero function on n variables.
  explicit BooleanFunction(int n);
  BooleanFunction(int n, BitVector table);

  static BooleanFunction from_values(int n, std::span<const int> values);

  template <class Predicate>
  static BooleanFunction from_predicate(int n, Predicate&& predicate) {
    BooleanFunction f(n);
    for (Point x = 0; x < f.size(); ++x) {
      if (predicate(x)) f.table_.set(x);
    }
    return f;
  }

  int dimension() const { return n_; }
  std::size_t size() const { return table_.size(); }
  bool operator()(Point x) const { return table_.test(x); }
  const BitVector& table() const { return table_; }

  std::size_t weight() const { return table_.count(); }
  std::vector<Point> support() const;

  // "0110..." in index order.
  std::string to_bit_string() const;

  // f + delta.
  BooleanFunction plus_constant(bool delta) const;
  // f + <c, .> + delta.
  BooleanFunction plus_affine(Point c, bool delta) const;

  friend BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g);
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  BitVector table_;
};

// Reduced algebraic normal form. Each monomial is a bitmask of variable indices;
// monomial 0 is the constant term. Monomials are kept sorted and unique.
struct Anf {
  int n = 0;
  std::vector<Point> monomials;

  int degree() const;
  friend bool operator==(const Anf&, const Anf&) = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;
};

// Element (A, b, c, delta) of the extended general affine group EGA(n, 2),
// acting by f |-> (x |-> f(A x + b) + <c, x> + delta).
struct EgaElement {
  BitMatrix a;
  Point b = 0;
  Point c = 0;
  bool delta = false;

  static EgaElement identity(int n);
  // Element of the extended translation subgroup (A = I).
  static EgaElement translation(int n, Point b, Point c, bool delta);
  int dimension() const { return static_cast<int>(a.rows()); }
};

// Binary Moebius transform and its inverse.
Anf anf_of(const BooleanFunction& f);
BooleanFunction function_of(const Anf& anf);

int degree(const BooleanFunction& f);

// W_f(x) = sum_y (-1)^{f(y) + <x,y>}, by the fast butterfly.
WalshSpectrum walsh_hadamard(const BooleanFunction& f);

bool is_bent(const BooleanFunction& f);

// 0 for weight 2^{2m-1} - 2^{m-1}, 1 for weight 2^{2m-1} + 2^{m-1}; throws NotBentWeight otherwise.
int weight_class(const BooleanFunction& f);

// Dual bent function: (-1)^{dual(x)} = 2^{-m} W_f(x). Throws NotBent.
BooleanFunction dual(const BooleanFunction& f);
// x |-> weight_class(y |-> f(y) + <x,y>). Independent route to the dual. Throws NotBent.
BooleanFunction dual_via_weight_classes(const BooleanFunction& f);

BooleanFunction apply_ega(const BooleanFunction& f, const EgaElement& e);
// Group law (A A', A b' + b, A'^T c + c', <c,b'> + delta + delta'), chosen so that
// apply_ega(apply_ega(f, e), e2) == apply_ega(f, ega_compose(e, e2)).
EgaElement ega_compose(const EgaElement& e, const EgaElement& e2);

}  // namespace bentcay
