#include "mlines/limits.hpp"

#include <algorithm>
#include <cstdlib>

namespace mlines {

int env_max_n_override() {
    const char* raw = std::getenv("METRIC_LINES_MAX_N");
    if (!raw) return 0;
    const int v = std::atoi(raw);
    return v > 0 ? v : 0;
}

EnumerationLimits enumeration_limits() {
    EnumerationLimits lim;
    const int env = env_max_n_override();
    if (env > 0) {
        lim.graphs = std::max(lim.graphs, env);
        lim.two_metric_iso = std::max(lim.two_metric_iso, env);
        lim.two_metric_labeled = std::max(lim.two_metric_labeled, env);
        lim.induced_cycles = std::max(lim.induced_cycles, env);
    }
    return lim;
}

}  // namespace mlines
