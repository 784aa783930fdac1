#pragma once

#include <utility>
#include <vector>

#include "mlines/distance_matrix.hpp"
#include "mlines/vertex_set.hpp"

namespace mlines {

// A line together with the unordered point pairs that generate it.
struct Line {
    VertexSet points;
    std::vector<std::pair<int, int>> generators;  // pairs (u, v) with u < v, sorted
    int width() const { return static_cast<int>(generators.size()); }
};

struct LineCensus {
    std::vector<Line> lines;       // deduplicated, sorted by point set
    int ell = 0;                   // distinct lines
    int ell_star = 0;              // distinct non-universal lines
    int universal_pair_count = 0;  // generator pairs of the full-set line

    const Line* find(const VertexSet& points) const;
    const Line* universal_line(int n) const;  // null when no line equals the full set
};

// The line generated by x and y: points z with d(x,y) = d(x,z)+d(z,y) or
// d(x,y) = |d(x,z)-d(z,y)|. Distances are nonnegative, so the sum branch
// needs no absolute value.
VertexSet line_points(const DistanceMatrix& d, int x, int y);
Line line(const DistanceMatrix& d, int x, int y);

// Evaluates all n(n-1)/2 pairs and deduplicates by point set.
LineCensus line_census(const DistanceMatrix& d);

// Pairs {x,y} whose line is the whole point set, in lexicographic order.
std::vector<std::pair<int, int>> universal_pairs(const DistanceMatrix& d);

// Pairs (v,v') with d(v,v') != 1 that agree in distance to every other point.
std::vector<std::pair<int, int>> twin_pairs(const DistanceMatrix& d);

}  // namespace mlines
