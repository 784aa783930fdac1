#pragma once

namespace mlines {

// Value of METRIC_LINES_MAX_N, or 0 when unset/unusable. Raises the built-in
// enumeration and cycle-search ceilings at the user's risk; it never raises
// the compile-time vertex capacity.
int env_max_n_override();

struct EnumerationLimits {
    int graphs = 8;              // connected / connected_bipartite, either labeling mode
    int two_metric_iso = 7;      // one representative per isomorphism class
    int two_metric_labeled = 8;  // all labeled {1,2} assignments
    int induced_cycles = 16;     // chordless-cycle enumeration
};

// Built-in ceilings with the environment override applied.
EnumerationLimits enumeration_limits();

}  // namespace mlines
