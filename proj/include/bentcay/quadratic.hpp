#pragma once

#include <random>

#include "bentcay/bit_matrix.hpp"
#include "bentcay/boolean_function.hpp"

namespace bentcay {

// q(x) = sum_{k<m} x_k x_{m+k} on 2m variables.
BooleanFunction canonical_quadratic(int m);

// For q = canonical_quadratic(m): c' with q(x + b) + <c, x> + q(b) = q(x) + <c', x>.
// Throws DimensionMismatch when q is not a canonical quadratic or b, c do not fit.
Point reduce_translation(const BooleanFunction& q, Point b, Point c);

struct QuadraticWitness {
  BitMatrix a;
  Point target_c = 0;
};

// A with A*A = I and q(A x) = q(x) + <c, x>. Throws WrongParity when q(c) = 1.
QuadraticWitness gl_witness_q0(int m, Point c);

// M with (q + <c, .>)(M x) = q(x) + <c2, x>. Throws WrongParity unless q(c) = q(c2) = 1.
BitMatrix gl_witness_q1(int m, Point c, Point c2);

// Checks (q + <c_in, .>)(A x) = q(x) + <c_out, x> at every x, evaluating the left side through
// x^T (L + Z) x with L the upper-triangular form of q and Z a random symmetric zero-diagonal matrix.
bool validate_witness(int m, const BitMatrix& a, Point c_in, Point c_out, std::mt19937_64& rng);

// Classifies the extended translation class of q and checks that it has exactly two bent
// classes, matching the weight classes entry for entry.
bool verify_quadratic_theorem(int m, unsigned workers = 1);

}  // namespace bentcay
