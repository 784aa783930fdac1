#include "mlines/induced_cycles.hpp"

#include <string>

#include "mlines/errors.hpp"
#include "mlines/limits.hpp"

namespace mlines {

namespace {

void check_ceiling(const Graph& g) {
    const int limit = enumeration_limits().induced_cycles;
    if (g.n() > limit)
        throw ResourceLimitError("induced-cycle search is limited to " + std::to_string(limit) +
                                 " vertices (METRIC_LINES_MAX_N raises the ceiling)");
}

// Chordless-path DFS. A path may be extended only by a vertex adjacent to its
// head and to none of the earlier path vertices; being adjacent to the start
// closes a chordless cycle instead.
struct CycleSearch {
    const Graph& g;
    int min_len;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> path;
    VertexSet on_path;
    VertexSet interior_adjacent;  // union of neighborhoods of path[1..m-1]
    bool stopped = false;

    CycleSearch(const Graph& g_, int min_len_,
                const std::function<bool(const std::vector<int>&)>& visit_)
        : g(g_), min_len(min_len_), visit(visit_) {}

    // Requires path.size() >= 2 and, when canonical, every path vertex beyond
    // the start greater than the start.
    void extend(bool canonical) {
        const int s = path[0];
        const int head = path.back();
        VertexSet candidates = g.neighbors(head) - on_path;
        candidates = candidates - interior_adjacent;
        candidates.for_each([&](int v) {
            if (stopped) return;
            if (canonical && v < s) return;
            if (g.has_edge(v, s)) {
                const int len = static_cast<int>(path.size()) + 1;
                if (len >= min_len && len >= 3 && (!canonical || path[1] < v)) {
                    path.push_back(v);
                    if (!visit(path)) stopped = true;
                    path.pop_back();
                }
                return;  // extending past v would leave the chord (v, s)
            }
            path.push_back(v);
            on_path.add(v);
            const int prev_head = path[path.size() - 2];
            const VertexSet saved = interior_adjacent;
            interior_adjacent |= g.neighbors(prev_head);
            extend(canonical);
            interior_adjacent = saved;
            on_path.remove(v);
            path.pop_back();
        });
    }

    void run_from(int s, bool canonical) {
        path = {s};
        on_path.clear();
        on_path.add(s);
        interior_adjacent.clear();
        VertexSet firsts = g.neighbors(s);
        firsts.for_each([&](int v) {
            if (stopped) return;
            if (canonical && v < s) return;
            path.push_back(v);
            on_path.add(v);
            extend(canonical);
            on_path.remove(v);
            path.pop_back();
        });
    }
};

}  // namespace

void for_each_induced_cycle(const Graph& g, int min_len,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    check_ceiling(g);
    CycleSearch search(g, min_len, visit);
    for (int s = 0; s < g.n() && !search.stopped; ++s) {
        if (g.degree(s) < 2) continue;
        search.run_from(s, /*canonical=*/true);
    }
}

std::vector<std::vector<int>> enumerate_induced_cycles(const Graph& g, int min_len) {
    std::vector<std::vector<int>> out;
    for_each_induced_cycle(g, min_len, [&](const std::vector<int>& cyc) {
        out.push_back(cyc);
        return true;
    });
    return out;
}

VertexSet long_induced_cycle_vertices(const Graph& g) {
    check_ceiling(g);
    VertexSet w;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 2) continue;
        bool found = false;
        std::function<bool(const std::vector<int>&)> stop_on_first =
            [&](const std::vector<int>&) {
                found = true;
                return false;
            };
        CycleSearch search(g, 6, stop_on_first);
        search.run_from(v, /*canonical=*/false);
        if (found) w.add(v);
    }
    return w;
}

}  // namespace mlines
