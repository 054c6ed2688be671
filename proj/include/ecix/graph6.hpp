// graph6.hpp — codec for the standard graph6 interchange format.
#pragma once

#include <string>
#include <string_view>

#include "ecix/graph.hpp"

namespace ecix {

// Order header N(n) followed by the upper-triangle bits x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each +63.
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects bad lengths, characters outside 63..126 and
// nonzero padding bits with distinct diagnostics.
Graph decode_graph6(std::string_view s);

}  // namespace ecix
