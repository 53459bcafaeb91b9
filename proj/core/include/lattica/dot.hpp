#pragma once

#include <string>

#include "lattica/involution.hpp"

namespace lattica {

// Graphviz rendering of the covering diagram, drawn bottom-up. Solid edges
// are exactly the cover pairs; an involution adds one dashed undirected arc
// per two-element orbit (fixed points draw nothing). Node names are element
// indices; labels() entries replace the displayed text when present.
// Output is deterministic: nodes ascending, edges in sorted cover order.
std::string to_dot(const Structure& s);

}  // namespace lattica
