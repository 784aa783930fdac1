#include "mlines/fixtures.hpp"

#include <algorithm>
#include <cctype>

namespace mlines {

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_bipartite(int p, int q) {
    Graph g(p + q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
    return g;
}

Graph wheel4() {
    Graph g = cycle(4);
    Graph w(5);
    for (auto [u, v] : g.edges()) w.add_edge(u, v);
    for (int i = 0; i < 4; ++i) w.add_edge(4, i);
    return w;
}

Graph wheel4_minus_spoke() {
    Graph w = wheel4();
    Graph out(5);
    for (auto [u, v] : w.edges())
        if (!(u == 3 && v == 4)) out.add_edge(u, v);
    return out;
}

Graph complete_minus_matching(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j != i + n / 2) g.add_edge(i, j);
    return g;
}

// Two 4-cycles sharing vertex 0: 0-1-2-3-0 and 0-4-5-6-0.
Graph glued_squares() {
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

// Base-point demonstration graph: v adjacent to a, b, c; d and e at distance
// two from v; triangle v-b-c.
Graph fs_demo() {
    return Graph::from_edges(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    out.push_back({"c4", cycle(4), {}, "4-cycle"});
    out.push_back({"k23", complete_bipartite(2, 3), {}, "complete bipartite K_{2,3}"});
    out.push_back({"w4", wheel4(), {}, "4-wheel: 4-cycle plus a hub adjacent to all four"});
    out.push_back({"w4prime", wheel4_minus_spoke(), {}, "4-wheel minus one spoke"});
    out.push_back({"k6prime", complete_minus_matching(6), {}, "K6 minus a perfect matching"});
    out.push_back({"k8prime", complete_minus_matching(8), {}, "K8 minus a perfect matching"});
    out.push_back({"glued_c4", glued_squares(), {}, "two 4-cycles glued at one vertex"});
    out.push_back({"fs_demo",
                   fs_demo(),
                   {"v", "a", "b", "c", "d", "e"},
                   "base point v with neighbors a,b,c and distance-2 points d,e"});
    return out;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const Fixture& f : all_fixtures())
        if (f.name == lowered) return &f;
    return nullptr;
}

const std::vector<std::string>& exceptional_fixture_names() {
    static const std::vector<std::string> names = {"c4",      "k23",     "w4",
                                                   "w4prime", "k6prime", "k8prime"};
    return names;
}

}  // namespace mlines
