#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlines/distance_matrix.hpp"
#include "mlines/graph.hpp"
#include "mlines/metric_lines.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

// Lines generated by vertex pairs at graph distance two. The width of a line
// is the number of such pairs attached to it.
struct Distance2Census {
    std::vector<Line> lines;  // deduplicated, sorted by point set
    int ell2 = 0;

    const Line* find(const VertexSet& points) const;
    int width_of(const VertexSet& points) const;  // 0 when absent
};

// d(y,v) - d(x,v); requires d(x,y) = 2. Takes values in {-2..2}, and in
// {-2,0,2} on the line of (x,y).
int delta(const DistanceMatrix& d, int x, int y, int v);

// Census over exactly the distance-2 pairs; requires diameter >= 2.
Distance2Census distance2_census(const Graph& g);
Distance2Census distance2_census(const Graph& g, const DistanceMatrix& d);

// Same collection without the diameter guard: a complete graph simply has an
// empty census. Used where subgraph censuses feed composition bounds.
Distance2Census collect_distance2_lines(const Graph& g, const DistanceMatrix& d);

// Lines generated by distance-2 pairs inside U, with points taken in all of g.
std::vector<Line> lines_over_subset(const Graph& g, const VertexSet& u);

// A shortest y-t path passing through x and then s, as the three-way distance
// equality d(y,t) = d(y,x)+d(x,t) = d(y,x)+d(x,s)+d(s,t) = d(y,s)+d(s,t).
bool yxst_holds(const DistanceMatrix& d, int y, int x, int s, int t);

// Vertex classes used by the distance-2 line lower bound for 2-connected
// bipartite twin-free graphs:
//   X  - vertices x dominating some y at distance 2 with a repeated line,
//   Yx - the distance-2 partners of x with repeated lines (for x in X),
//   Z  - union of the distance-2 neighborhoods of X,
//   W  - vertices on chordless cycles of length >= 6,
//   C  - everything else.
struct ProofSets {
    VertexSet X, Y, Z, W, C;
    std::vector<VertexSet> y_for;  // indexed by vertex; nonempty only on X
    std::vector<std::string> precondition_violations;
    bool preconditions_hold() const { return precondition_violations.empty(); }
};

ProofSets compute_proof_sets(const Graph& g);
ProofSets compute_proof_sets(const Graph& g, const DistanceMatrix& d,
                             const Distance2Census& census);

// A distance-2 partner for every vertex, built so that the induced line map
// u -> line(u, partner(u)) is injective. Requires a 2-connected bipartite
// twin-free graph. A vertex the construction cannot serve (which the theory
// rules out) is reported rather than guessed.
struct GAssignment {
    std::vector<int> g;             // partner per vertex, -1 if unassigned
    std::vector<VertexSet> f_line;  // line generated by (u, g[u])
    std::optional<int> stuck_vertex;
    bool complete() const { return !stuck_vertex.has_value(); }
};

GAssignment construct_g(const Graph& g);

// Pair of vertices with identical line images, if any.
std::optional<std::pair<int, int>> find_line_collision(const GAssignment& a);

}  // namespace mlines
