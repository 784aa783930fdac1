#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlines/distance_matrix.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

// Simple undirected graph over dense vertex indices, adjacency as bitsets.
class Graph {
    int n_ = 0;
    std::vector<VertexSet> adj_;

public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    void add_edge(int u, int v);
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, sorted

    bool operator==(const Graph&) const = default;
};

bool is_connected(const Graph& g);

// BFS metric of a connected graph; names two unreachable vertices otherwise.
DistanceMatrix shortest_path_metric(const Graph& g);

// {u : d(v,u) = r}.
VertexSet neighbors_at_distance(const Graph& g, int v, int r);

// True iff N(y) is contained in N(x). Open neighborhoods; at distance two the
// open/closed distinction is vacuous, which is the only place the harness
// applies it.
bool dominates(const Graph& g, int x, int y);

// Subgraph induced by `keep`, reindexed densely; old_of_new[i] gives the
// original index of new vertex i when requested.
Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>* old_of_new = nullptr);
Graph delete_vertex(const Graph& g, int v, std::vector<int>* old_of_new = nullptr);

// True iff a and b lie in the same component of the subgraph induced by
// `allowed` (false when either endpoint is outside it).
bool connected_in_subgraph(const Graph& g, const VertexSet& allowed, int a, int b);

// graph6: 6-bit big-endian column-major upper triangle, printable offset 63,
// optional ">>graph6<<" header.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);
std::vector<Graph> read_graph6(std::istream& in);  // one graph per line

// Edge-list text: "n m" then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace mlines
