#include "bentcay/catalog.hpp"

#include "bentcay/errors.hpp"
#include "bentcay/ingest.hpp"

namespace bentcay {

const std::vector<NamedFunction>& catalog() {
  static const std::vector<NamedFunction> entries = {
      {"f2_1", 2, "x0*x1"},
      {"f4_1", 4, "x0*x1 + x2*x3"},
      {"f6_1", 6, "x0*x1 + x2*x3 + x4*x5"},
      {"f6_2", 6, "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5"},
      {"f6_3", 6, "x0*x1*x2 + x0*x1 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x4 + x3*x4"},
      {"f6_4", 6,
       "x0*x1*x2 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x3*x5 + x2*x3 + x2*x4 + x2*x5 + x3*x4 + x3*x5"},
      {"f8_1", 8, "x0*x1 + x2*x3 + x4*x5 + x6*x7"},
      {"f8_2", 8, "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5 + x6*x7"},
      {"f8_3", 8, "x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x5 + x2*x3 + x4*x7"},
      {"f8_4", 8, "x0*x1*x2 + x0*x2 + x0*x4 + x1*x3*x4 + x1*x5 + x2*x3 + x6*x7"},
      {"f8_5", 8, "x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x4 + x1*x5 + x2*x3*x5 + x2*x4 + x3*x7"},
      {"f8_6", 8, "x0*x1*x2 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x5*x7"},
      {"f8_7", 8,
       "x0*x1*x2 + x0*x1 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x4 + x1*x5 + x2*x3*x5 + x2*x4 + x6*x7"},
      {"f8_8", 8, "x0*x1*x2 + x0*x5 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x3*x7"},
      {"f8_9", 8, "x0*x1*x6 + x0*x3 + x1*x4 + x2*x3*x6 + x2*x5 + x3*x4 + x4*x5*x6 + x6*x7"},
      {"f8_10", 8,
       "x0*x1*x2 + x0*x3*x6 + x0*x4 + x0*x5 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x3*x7"},
      {"cast128_1_0", 8,
       "x0*x1*x2*x3 + x0*x1*x2*x4 + x0*x1*x2*x5 + x0*x1*x2 + x0*x1*x3*x5 + x0*x1*x3*x6 + x0*x1*x3 + "
       "x0*x1*x5*x6 + x0*x1*x6 + x0*x1*x7 + x0*x2*x3*x4 + x0*x2*x3 + x0*x2*x4*x5 + x0*x2*x5*x7 + "
       "x0*x2*x6 + x0*x2*x7 + x0*x2 + x0*x3*x4*x5 + x0*x3*x4*x6 + x0*x3*x5*x6 + x0*x3 + x0*x4*x5*x6 + "
       "x0*x4*x5*x7 + x0*x4*x5 + x0*x4*x6 + x0*x4 + x0*x5*x6 + x0*x5*x7 + x0*x6 + x0*x7 + x0 + "
       "x1*x2*x4*x6 + x1*x2*x4*x7 + x1*x2*x5*x6 + x1*x2*x7 + x1*x3*x4*x6 + x1*x3*x4*x7 + x1*x3*x5 + "
       "x1*x3*x7 + x1*x4*x5*x7 + x1*x4*x6 + x1*x5*x6 + x1 + x2*x3*x4*x6 + x2*x3*x4 + x2*x3*x5*x6 + "
       "x2*x3*x5 + x2*x3*x7 + x2*x4 + x2*x5*x6 + x2*x5 + x2 + x3*x4*x5*x6 + x3*x5*x6 + x3*x5*x7 + "
       "x3*x6 + x3 + x4 + x6*x7"},
  };
  return entries;
}

const NamedFunction& named(std::string_view name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry;
  }
  throw RangeError("unknown function name: " + std::string(name));
}

BooleanFunction named_function(std::string_view name) {
  const auto& entry = named(name);
  return parse_anf(entry.anf, entry.n);
}

}  // namespace bentcay
