#include "mlines/structure.hpp"

#include <algorithm>
#include <functional>

namespace mlines {

namespace {

struct DfsState {
    const Graph& g;
    std::vector<int> disc, low, parent;
    int timer = 0;
    StructureSummary& out;

    DfsState(const Graph& g_, StructureSummary& out_)
        : g(g_),
          disc(static_cast<std::size_t>(g_.n()), -1),
          low(static_cast<std::size_t>(g_.n()), 0),
          parent(static_cast<std::size_t>(g_.n()), -1),
          out(out_) {}

    void run(int root) {
        int root_children = 0;
        dfs(root, root, root_children);
        if (root_children >= 2) out.cut_vertices.add(root);
    }

    void dfs(int u, int root, int& root_children) {
        disc[u] = low[u] = timer++;
        g.neighbors(u).for_each([&](int v) {
            if (disc[v] == -1) {
                parent[v] = u;
                if (u == root) ++root_children;
                dfs(v, root, root_children);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) out.bridges.emplace_back(std::min(u, v), std::max(u, v));
                if (u != root && low[v] >= disc[u]) out.cut_vertices.add(u);
            } else if (v != parent[u]) {
                low[u] = std::min(low[u], disc[v]);
            }
        });
    }
};

// Walks parent pointers from both endpoints of a same-color edge up to their
// meeting point; the result is an odd cycle.
std::vector<int> odd_cycle_from_conflict(int u, int v, const std::vector<int>& parent,
                                         const std::vector<int>& depth) {
    std::vector<int> up, vp;
    int a = u, b = v;
    while (depth[a] > depth[b]) {
        up.push_back(a);
        a = parent[a];
    }
    while (depth[b] > depth[a]) {
        vp.push_back(b);
        b = parent[b];
    }
    while (a != b) {
        up.push_back(a);
        vp.push_back(b);
        a = parent[a];
        b = parent[b];
    }
    up.push_back(a);
    up.insert(up.end(), vp.rbegin(), vp.rend());
    return up;
}

}  // namespace

StructureSummary structure_summary(const Graph& g) {
    StructureSummary s;
    const int n = g.n();

    DfsState dfs(g, s);
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (dfs.disc[v] == -1) {
            ++components;
            dfs.run(v);
        }
    s.is_connected = components <= 1;
    std::sort(s.bridges.begin(), s.bridges.end());
    s.bridge_count = static_cast<int>(s.bridges.size());
    s.is_biconnected = s.is_connected && n >= 3 && s.cut_vertices.empty();

    // Two-coloring; a conflicting edge yields an odd-cycle witness.
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    bool bipartite = true;
    for (int root = 0; root < n && bipartite; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size() && bipartite; ++qi) {
            const int u = queue[qi];
            g.neighbors(u).for_each([&](int v) {
                if (!bipartite) return;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                    s.odd_cycle = odd_cycle_from_conflict(u, v, parent, depth);
                }
            });
        }
    }
    if (bipartite) s.bipartition = std::move(color);
    return s;
}

bool is_bipartite(const Graph& g) { return structure_summary(g).bipartition.has_value(); }

bool is_biconnected(const Graph& g) { return structure_summary(g).is_biconnected; }

}  // namespace mlines
