#pragma once

#include <functional>

#include "graphroots/graph.hpp"
#include "graphroots/root_result.hpp"

namespace graphroots::detail {

/// Star K_{1,n-1} centred at vertex 0.
Graph star_root(int n);

/// Runs `solve` on every connected, non-complete component (complete ones get
/// a star root, isolated vertices stay isolated) and assembles the roots. The
/// first component that fails decides the reason. The assembled root is
/// re-verified against g and `acceptable`; failure yields kSquareCheckFailed.
RootResult solve_per_component(const Graph& g,
                               const std::function<RootResult(const Graph&)>& solve,
                               const std::function<bool(const Graph&)>& acceptable);

}  // namespace graphroots::detail
