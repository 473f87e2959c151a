#pragma once

#include <string>
#include <string_view>

#include "deza/graph.hpp"

namespace deza {

/// Standard graph6 text encoding: the order, then the upper-triangle bits in
/// column-major order packed into 6-bit chunks offset by 63.
std::string to_graph6(const Graph& g);

/// Throws std::invalid_argument on malformed input or order > 64.
Graph from_graph6(std::string_view s);

}  // namespace deza
