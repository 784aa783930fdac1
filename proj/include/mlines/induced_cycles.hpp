#pragma once

#include <functional>
#include <vector>

#include "mlines/graph.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

// Visits every chordless cycle of length >= min_len exactly once up to
// rotation and reflection; each cycle starts at its minimum vertex. A false
// return from the visitor stops the walk. Exponential in general, guarded by
// the induced-cycle ceiling.
void for_each_induced_cycle(const Graph& g, int min_len,
                            const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> enumerate_induced_cycles(const Graph& g, int min_len);

// Vertices lying on at least one chordless cycle of length >= 6. Implemented
// as a per-vertex early-exit search, independent of the full enumerator.
VertexSet long_induced_cycle_vertices(const Graph& g);

}  // namespace mlines
