#pragma once

#include <string>

#include "vnx/graph.hpp"

namespace vnx {

// Graphviz output. With color_by_dissect the nodes are filled by their
// dissection category (fringe / contracted / largest motif / other).
std::string emit_dot(const CapGraph& g, bool color_by_dissect = false,
                     const std::string& name = "g");

} // namespace vnx
