#include "mlines/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

#include "mlines/errors.hpp"
#include "mlines/structure.hpp"

namespace mlines {

namespace {

// Orderings that realize the minimal bit-string prefix so far. Two orderings
// with the same placed set and the same adjacency pattern of every remaining
// vertex toward the placed sequence have identical completions, so one is
// kept.
std::string future_key(const Graph& g, const std::vector<std::uint8_t>& order) {
    std::vector<bool> placed(static_cast<std::size_t>(g.n()), false);
    for (auto v : order) placed[v] = true;
    std::string key;
    key.reserve(static_cast<std::size_t>(g.n()) * 9);
    for (int u = 0; u < g.n(); ++u) {
        if (placed[u]) continue;
        std::uint64_t pattern = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            pattern = (pattern << 1) | (g.has_edge(order[i], u) ? 1 : 0);
        key.push_back(static_cast<char>(u));
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((pattern >> (8 * b)) & 0xff));
    }
    return key;
}

}  // namespace

Graph canonical_relabel(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return g;

    std::vector<std::vector<std::uint8_t>> states{{}};
    for (int level = 0; level < n; ++level) {
        std::uint64_t best = ~std::uint64_t{0};
        std::vector<std::vector<std::uint8_t>> next;
        std::set<std::string> seen;
        for (const auto& st : states) {
            std::vector<bool> placed(static_cast<std::size_t>(n), false);
            for (auto v : st) placed[v] = true;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::uint64_t chunk = 0;
                for (int i = 0; i < level; ++i)
                    chunk = (chunk << 1) | (g.has_edge(st[i], v) ? 1 : 0);
                if (chunk > best) continue;
                if (chunk < best) {
                    best = chunk;
                    next.clear();
                    seen.clear();
                }
                auto cand = st;
                cand.push_back(static_cast<std::uint8_t>(v));
                if (seen.insert(future_key(g, cand)).second) next.push_back(std::move(cand));
            }
        }
        states = std::move(next);
    }

    const auto& order = states.front();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(order[i], order[j])) out.add_edge(i, j);
    return out;
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_relabel(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

const std::vector<Graph>& all_graph_classes(int n) {
    if (n < 1) throw std::invalid_argument("all_graph_classes: n must be positive");
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    if (auto it = cache.find(n); it != cache.end()) return it->second;

    if (!cache.count(1)) cache[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        if (cache.count(k)) continue;
        const std::vector<Graph>& parents = cache[k - 1];
        std::map<std::string, Graph> children;
        for (const Graph& p : parents) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
                Graph child(k);
                for (auto [u, v] : p.edges()) child.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) child.add_edge(v, k - 1);
                Graph canon = canonical_relabel(child);
                children.emplace(graph6_encode(canon), std::move(canon));
            }
        }
        std::vector<Graph>& level = cache[k];
        level.reserve(children.size());
        for (auto& [key, graph] : children) level.push_back(std::move(graph));
    }
    return cache[n];
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Row-major strict upper triangle, matching the distance-matrix text format.
Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
            if ((mask >> p) & 1) g.add_edge(i, j);
    return g;
}

void check_range(const FamilySpec& spec, int ceiling, const char* what) {
    if (spec.n_min < 2 || spec.n_min > spec.n_max)
        throw std::invalid_argument("enumeration: need 2 <= n_min <= n_max");
    if (spec.shard_count < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_count)
        throw std::invalid_argument("enumeration: shard index must lie below shard count");
    if (spec.n_max > ceiling)
        throw ResourceLimitError(std::string(what) + " enumeration is limited to n <= " +
                                 std::to_string(ceiling) +
                                 "; supply an external graph6 corpus or raise "
                                 "METRIC_LINES_MAX_N for larger instances");
}

}  // namespace

void enumerate_graphs(const FamilySpec& spec, const std::function<bool(const Graph&)>& emit) {
    if (spec.family == Family::TwoMetric)
        throw std::invalid_argument("enumerate_graphs: got a two_metric spec");
    check_range(spec, enumeration_limits().graphs, "graph");

    const bool want_bipartite = spec.family == Family::ConnectedBipartite;
    std::int64_t index = 0;
    auto offer = [&](const Graph& g) -> bool {
        if (!is_connected(g)) return true;
        if (want_bipartite && !is_bipartite(g)) return true;
        const bool mine = index % spec.shard_count == spec.shard_index;
        ++index;
        return mine ? emit(g) : true;
    };

    if (spec.up_to_iso) {
        for (int k = spec.n_min; k <= spec.n_max; ++k)
            for (const Graph& g : all_graph_classes(k))
                if (!offer(g)) return;
    } else {
        for (int k = spec.n_min; k <= spec.n_max; ++k) {
            const std::uint64_t total = std::uint64_t{1} << pair_count(k);
            for (std::uint64_t mask = 0; mask < total; ++mask)
                if (!offer(graph_from_mask(k, mask))) return;
        }
    }
}

void enumerate_two_metrics(const FamilySpec& spec,
                           const std::function<bool(const DistanceMatrix&)>& emit) {
    if (spec.family != Family::TwoMetric)
        throw std::invalid_argument("enumerate_two_metrics: spec is not a two_metric family");
    const auto lim = enumeration_limits();
    check_range(spec, spec.up_to_iso ? lim.two_metric_iso : lim.two_metric_labeled, "2-metric");

    std::int64_t index = 0;
    auto offer = [&](const Graph& g) -> bool {
        const bool mine = index % spec.shard_count == spec.shard_index;
        ++index;
        return mine ? emit(two_metric_from_graph(g)) : true;
    };

    if (spec.up_to_iso) {
        for (int k = spec.n_min; k <= spec.n_max; ++k)
            for (const Graph& g : all_graph_classes(k))
                if (!offer(g)) return;
    } else {
        for (int k = spec.n_min; k <= spec.n_max; ++k) {
            const std::uint64_t total = std::uint64_t{1} << pair_count(k);
            for (std::uint64_t mask = 0; mask < total; ++mask)
                if (!offer(graph_from_mask(k, mask))) return;
        }
    }
}

DistanceMatrix two_metric_from_graph(const Graph& g) {
    DistanceMatrix d(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) d.set(i, j, g.has_edge(i, j) ? 1 : 2);
    return d;
}

Graph distance1_graph(const DistanceMatrix& d) {
    Graph g(d.n());
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j)
            if (d(i, j) == 1) g.add_edge(i, j);
    return g;
}

}  // namespace mlines
