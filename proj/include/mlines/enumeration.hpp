#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mlines/distance_matrix.hpp"
#include "mlines/graph.hpp"
#include "mlines/limits.hpp"

namespace mlines {

enum class Family { Connected, ConnectedBipartite, TwoMetric };

struct FamilySpec {
    Family family = Family::Connected;
    int n_min = 2;
    int n_max = 2;
    bool up_to_iso = true;
    int shard_index = 0;
    int shard_count = 1;
};

// Canonical relabeling: the vertex order minimizing the adjacency bit string
// (column-major upper triangle, the graph6 bit order), found by breadth-wise
// prefix minimization with equivalent-state merging. Equal canonical forms
// if and only if isomorphic.
Graph canonical_relabel(const Graph& g);
std::string canonical_form(const Graph& g);  // graph6 of the relabeled graph
bool isomorphic(const Graph& a, const Graph& b);

// All isomorphism classes on n vertices (connected or not), canonical
// representatives in canonical-form order. Built by augmenting the classes on
// n-1 vertices with one vertex, so labeled graphs are never materialized.
const std::vector<Graph>& all_graph_classes(int n);

// Emits the family in a deterministic order; the callback returns false to
// stop. Throws ResourceLimitError beyond the configured ceilings.
void enumerate_graphs(const FamilySpec& spec, const std::function<bool(const Graph&)>& emit);
void enumerate_two_metrics(const FamilySpec& spec,
                           const std::function<bool(const DistanceMatrix&)>& emit);

// A {1,2}-valued metric and its distance-1 graph determine each other; the
// triangle inequality is automatic.
DistanceMatrix two_metric_from_graph(const Graph& g);
Graph distance1_graph(const DistanceMatrix& d);

}  // namespace mlines
