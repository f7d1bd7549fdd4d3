#pragma once

#include "bentcay/boolean_function.hpp"

namespace bentcay {

// sigma_m(i) = 1 iff the base-4 representation of i (m digits) has an odd number of 1 digits.
// Throws RangeError unless 1 <= m <= 12.
BooleanFunction sigma(int m);

// tau_1 is 1 only at i = 2 (bit string "10"). For m > 1 the top bit pair p of the
// 2m-bit index selects: 00 -> tau_{m-1}, 01 -> sigma_{m-1}, 10 -> sigma_{m-1} + 1, 11 -> tau_{m-1}
// applied to the low 2m-2 bits. Throws RangeError unless 1 <= m <= 12.
BooleanFunction tau(int m);

}  // namespace bentcay
