#pragma once

#include <vector>

#include "vnx/graph.hpp"

namespace vnx {

// Exact graph isomorphism respecting node/edge capacities and demands.
bool is_isomorphic(const CapGraph& a, const CapGraph& b);

// Isomorphism that additionally requires matching node colors: f(v) is only
// allowed when colors_a[v] == colors_b[f(v)]. Used to compare attachment-marked
// graphs (e.g. dictionary words, where in/out nodes carry distinct colors).
bool is_isomorphic_marked(const CapGraph& a, const CapGraph& b,
                          const std::vector<int>& colors_a,
                          const std::vector<int>& colors_b);

} // namespace vnx
