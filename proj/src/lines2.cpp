#include "mlines/lines2.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlines/induced_cycles.hpp"
#include "mlines/structure.hpp"

namespace mlines {

namespace {

void insert_line(std::vector<Line>& lines, const VertexSet& pts, int u, int v) {
    auto it = std::lower_bound(lines.begin(), lines.end(), pts,
                               [](const Line& l, const VertexSet& p) { return l.points < p; });
    if (it == lines.end() || !(it->points == pts))
        it = lines.insert(it, Line{pts, {}});
    it->generators.emplace_back(u, v);
}

}  // namespace

const Line* Distance2Census::find(const VertexSet& points) const {
    auto it = std::lower_bound(lines.begin(), lines.end(), points,
                               [](const Line& l, const VertexSet& p) { return l.points < p; });
    if (it == lines.end() || !(it->points == points)) return nullptr;
    return &*it;
}

int Distance2Census::width_of(const VertexSet& points) const {
    const Line* l = find(points);
    return l ? l->width() : 0;
}

int delta(const DistanceMatrix& d, int x, int y, int v) {
    if (d(x, y) != 2) throw std::invalid_argument("delta: generating pair must be at distance 2");
    return d(y, v) - d(x, v);
}

Distance2Census collect_distance2_lines(const Graph& g, const DistanceMatrix& d) {
    Distance2Census c;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (d(i, j) == 2) insert_line(c.lines, line_points(d, i, j), i, j);
    c.ell2 = static_cast<int>(c.lines.size());
    return c;
}

Distance2Census distance2_census(const Graph& g, const DistanceMatrix& d) {
    if (d.diameter() < 2)
        throw std::invalid_argument("distance2_census: graph has no pairs at distance 2");
    return collect_distance2_lines(g, d);
}

Distance2Census distance2_census(const Graph& g) {
    return distance2_census(g, shortest_path_metric(g));
}

std::vector<Line> lines_over_subset(const Graph& g, const VertexSet& u) {
    const DistanceMatrix d = shortest_path_metric(g);
    std::vector<Line> lines;
    u.for_each([&](int i) {
        u.for_each([&](int j) {
            if (i < j && d(i, j) == 2) insert_line(lines, line_points(d, i, j), i, j);
        });
    });
    return lines;
}

bool yxst_holds(const DistanceMatrix& d, int y, int x, int s, int t) {
    const int yt = d(y, t);
    return yt == d(y, x) + d(x, t) && yt == d(y, x) + d(x, s) + d(s, t) &&
           yt == d(y, s) + d(s, t);
}

ProofSets compute_proof_sets(const Graph& g, const DistanceMatrix& d,
                             const Distance2Census& census) {
    ProofSets ps;
    ps.y_for.assign(static_cast<std::size_t>(g.n()), VertexSet{});

    if (!is_biconnected(g)) ps.precondition_violations.push_back("not 2-connected");
    if (!is_bipartite(g)) ps.precondition_violations.push_back("not bipartite");
    if (!twin_pairs(d).empty()) ps.precondition_violations.push_back("has a pair of twins");

    ps.W = long_induced_cycle_vertices(g);
    for (int x = 0; x < g.n(); ++x) {
        const VertexSet n2 = d.at_distance(x, 2);
        VertexSet wide;
        n2.for_each([&](int y) {
            if (census.width_of(line_points(d, x, y)) > 1) wide.add(y);
        });
        bool in_x = false;
        wide.for_each([&](int y) {
            if (dominates(g, x, y)) in_x = true;
        });
        if (in_x) {
            ps.X.add(x);
            ps.y_for[x] = wide;
            ps.Y |= wide;
            ps.Z |= n2;
        }
    }
    ps.C = VertexSet::full(g.n()) - (ps.Z | ps.X | ps.W);
    return ps;
}

ProofSets compute_proof_sets(const Graph& g) {
    const DistanceMatrix d = shortest_path_metric(g);
    return compute_proof_sets(g, d, collect_distance2_lines(g, d));
}

namespace {

// Assigns successors-at-two along one chordless cycle c0..c(L-1): every
// vertex maps to the vertex two steps ahead.
void assign_cycle(std::vector<int>& gmap, const std::vector<int>& cyc) {
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) gmap[cyc[i]] = cyc[(i + 2) % len];
}

}  // namespace

GAssignment construct_g(const Graph& g) {
    const int n = g.n();
    {
        std::vector<std::string> why;
        if (!is_biconnected(g)) why.push_back("not 2-connected");
        if (!is_bipartite(g)) why.push_back("not bipartite");
        if (!why.empty() || !twin_pairs(shortest_path_metric(g)).empty()) {
            if (why.empty()) why.push_back("has a pair of twins");
            std::string msg = "construct_g requires a 2-connected bipartite twin-free graph:";
            for (const auto& w : why) msg += " " + w + ";";
            throw std::invalid_argument(msg);
        }
    }
    const DistanceMatrix d = shortest_path_metric(g);
    const Distance2Census census = collect_distance2_lines(g, d);
    const ProofSets ps = compute_proof_sets(g, d, census);

    GAssignment a;
    a.g.assign(static_cast<std::size_t>(n), -1);

    // Long cycles first, in canonical enumeration order. A cycle is taken when
    // it still covers an unassigned vertex; its assignments overwrite earlier
    // ones, including on shared vertices.
    for_each_induced_cycle(g, 6, [&](const std::vector<int>& cyc) {
        bool fresh = false;
        for (int v : cyc) fresh = fresh || a.g[v] == -1;
        if (fresh) assign_cycle(a.g, cyc);
        return true;
    });

    std::vector<VertexSet> n2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) n2[v] = d.at_distance(v, 2);
    auto width1 = [&](int u, int v) { return census.width_of(line_points(d, u, v)) == 1; };

    // Vertices away from long cycles and from repeated-line structure.
    for (int u = ps.C.first(); u >= 0; u = ps.C.next(u)) {
        int pick = -1;
        n2[u].for_each([&](int v) {
            if (pick == -1 && a.g[v] != u) pick = v;
        });
        if (pick != -1) {
            a.g[u] = pick;
            continue;
        }
        // Everything at distance 2 already points here: reroute through a pair
        // z, z' sharing a neighbor with u.
        bool done = false;
        n2[u].for_each([&](int z) {
            if (done) return;
            n2[u].for_each([&](int zp) {
                if (done || z == zp) return;
                if ((g.neighbors(u) & g.neighbors(z) & g.neighbors(zp)).empty()) return;
                a.g[u] = z;
                a.g[z] = zp;
                done = true;
            });
        });
        if (!done) {
            a.stuck_vertex = u;
            return a;
        }
    }

    // Distance-2 neighbors of X, off the long cycles. First those with some
    // x in X whose line with u is unrepeated; then the rest.
    const VertexSet z_rest = ps.Z - (ps.X | ps.W);
    VertexSet deferred;
    for (int u = z_rest.first(); u >= 0; u = z_rest.next(u)) {
        int pick = -1;
        (n2[u] & ps.X).for_each([&](int x) {
            if (pick == -1 && width1(u, x) && a.g[x] != u) pick = x;
        });
        if (pick != -1)
            a.g[u] = pick;
        else
            deferred.add(u);
    }
    for (int u = deferred.first(); u >= 0; u = deferred.next(u)) {
        int pick = -1;
        n2[u].for_each([&](int z) {
            if (pick != -1 || a.g[z] == u) return;
            if (!ps.X.contains(z) || width1(u, z)) pick = z;
        });
        if (pick == -1) {
            a.stuck_vertex = u;
            return a;
        }
        a.g[u] = pick;
    }

    // Finally X itself (off the long cycles): any repeated-line partner works.
    const VertexSet x_rest = ps.X - ps.W;
    for (int u = x_rest.first(); u >= 0; u = x_rest.next(u)) {
        int pick = -1;
        ps.y_for[u].for_each([&](int y) {
            if (pick == -1 && a.g[y] != u) pick = y;
        });
        if (pick == -1) {
            a.stuck_vertex = u;
            return a;
        }
        a.g[u] = pick;
    }

    for (int u = 0; u < n; ++u) {
        if (a.g[u] == -1 || d(u, a.g[u]) != 2) {
            a.stuck_vertex = u;
            return a;
        }
    }
    a.f_line.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) a.f_line.push_back(line_points(d, u, a.g[u]));
    return a;
}

std::optional<std::pair<int, int>> find_line_collision(const GAssignment& a) {
    for (std::size_t u = 0; u < a.f_line.size(); ++u)
        for (std::size_t v = u + 1; v < a.f_line.size(); ++v)
            if (a.f_line[u] == a.f_line[v])
                return std::make_pair(static_cast<int>(u), static_cast<int>(v));
    return std::nullopt;
}

}  // namespace mlines
