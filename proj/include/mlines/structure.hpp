#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mlines/graph.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

struct StructureSummary {
    bool is_connected = false;
    int bridge_count = 0;
    std::vector<std::pair<int, int>> bridges;  // (u,v) with u < v, sorted
    VertexSet cut_vertices;
    bool is_biconnected = false;  // connected, n >= 3, no cut vertex
    std::optional<std::vector<int>> bipartition;  // colors 0/1 per vertex
    std::vector<int> odd_cycle;  // witness cycle when not bipartite
};

// Bridges and cut vertices by DFS low-points, two-coloring by BFS. Works on
// disconnected graphs (per component).
StructureSummary structure_summary(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_biconnected(const Graph& g);

}  // namespace mlines
