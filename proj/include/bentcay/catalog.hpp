#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bentcay/boolean_function.hpp"

namespace bentcay {

// Named bent representatives: f2_1, f4_1, f6_1..f6_4, f8_1..f8_10 and cast128_1_0.
struct NamedFunction {
  std::string name;
  int n = 0;
  std::string anf;
};

const std::vector<NamedFunction>& catalog();

// Throws RangeError for an unknown name.
const NamedFunction& named(std::string_view name);
BooleanFunction named_function(std::string_view name);

}  // namespace bentcay
