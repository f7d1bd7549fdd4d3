#include "bentcay/sequences.hpp"

#include "bentcay/errors.hpp"

namespace bentcay {

namespace {

void check_order(int m) {
  if (m < 1 || 2 * m > kMaxVariables) throw RangeError("sequence index m must be in 1..12");
}

bool sigma_at(int m, Point i) {
  bool odd = false;
  for (int d = 0; d < m; ++d) odd ^= ((i >> (2 * d)) & 3U) == 1;
  return odd;
}

bool tau_at(int m, Point i) {
  while (m > 1) {
    const Point prefix = (i >> (2 * m - 2)) & 3U;
    const Point low = i & ((Point{1} << (2 * m - 2)) - 1);
    if (prefix == 1) return sigma_at(m - 1, low);
    if (prefix == 2) return !sigma_at(m - 1, low);
    i = low;
    --m;
  }
  return i == 2;
}

}  // namespace

BooleanFunction sigma(int m) {
  check_order(m);
  return BooleanFunction::from_predicate(2 * m, [m](Point i) { return sigma_at(m, i); });
}

BooleanFunction tau(int m) {
  check_order(m);
  return BooleanFunction::from_predicate(2 * m, [m](Point i) { return tau_at(m, i); });
}

}  // namespace bentcay
