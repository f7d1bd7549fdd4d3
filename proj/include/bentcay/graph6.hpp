#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "bentcay/dense_graph.hpp"

namespace bentcay {

// Largest vertex count the graph6 size field can express with the 4-byte form.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

// Standard graph6: size field, then upper-triangle bits x(0,1), x(0,2), x(1,2), ...
// packed six per byte, each byte offset by 63.
std::string graph6_encode(const DenseGraph& g);
// Throws MalformedGraph6.
DenseGraph graph6_decode(std::string_view text);

}  // namespace bentcay
