#include "mlines/verification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "mlines/enumeration.hpp"
#include "mlines/fixtures.hpp"
#include "mlines/induced_cycles.hpp"
#include "mlines/lines2.hpp"
#include "mlines/metric_lines.hpp"
#include "mlines/structure.hpp"

namespace mlines {

using nlohmann::json;

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Exempt: return "exempt";
        case Status::PreconditionUnmet: return "precondition_unmet";
    }
    return "unknown";
}

namespace {

json set_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

Verdict unmet(std::string check, const std::string& id, const std::string& reason) {
    Verdict v{std::move(check), id, Status::PreconditionUnmet, json{{"reason", reason}}, {}};
    return v;
}

bool metric_twins(const DistanceMatrix& d, int x, int y) {
    if (d(x, y) == 1) return false;
    for (int u = 0; u < d.n(); ++u) {
        if (u == x || u == y) continue;
        if (d(x, u) != d(y, u)) return false;
    }
    return true;
}

}  // namespace

Verdict check_chen_chvatal(const DistanceMatrix& d, const std::string& id) {
    Verdict v{"chen_chvatal", id, Status::Pass, nullptr, {}};
    if (d.n() < 2) return unmet("chen_chvatal", id, "need at least two points");
    const LineCensus c = line_census(d);
    v.metrics = {{"n", d.n()},
                 {"ell", c.ell},
                 {"ell_star", c.ell_star},
                 {"up", c.universal_pair_count}};
    if (c.ell < d.n() && c.universal_pair_count == 0) {
        v.status = Status::Fail;
        v.witness = {{"reason", "fewer lines than points and no universal line"}};
    }
    return v;
}

Verdict check_br_bound(const Graph& g, const std::string& id) {
    Verdict v{"br_bound", id, Status::Pass, nullptr, {}};
    if (!is_connected(g)) return unmet("br_bound", id, "not connected");
    if (g.n() < 3) return unmet("br_bound", id, "need at least three vertices");
    const StructureSummary st = structure_summary(g);
    if (!st.bipartition) return unmet("br_bound", id, "not bipartite");

    static const Graph c4 = find_fixture("c4")->graph;
    static const Graph k23 = find_fixture("k23")->graph;
    if (isomorphic(g, c4) || isomorphic(g, k23)) {
        v.status = Status::Exempt;
        v.witness = {{"exempt", isomorphic(g, c4) ? "c4" : "k23"}};
        return v;
    }

    const Distance2Census c = distance2_census(g);
    v.metrics = {{"n", g.n()}, {"ell2", c.ell2}, {"br", st.bridge_count}};
    if (c.ell2 + st.bridge_count < g.n()) {
        v.status = Status::Fail;
        v.witness = {{"reason", "ell2 + br below vertex count"}};
    }
    return v;
}

Verdict check_notwins_bound(const Graph& g, const std::string& id) {
    Verdict v{"notwins_bound", id, Status::Pass, nullptr, {}};
    if (!is_connected(g)) return unmet("notwins_bound", id, "not connected");
    if (!is_biconnected(g)) return unmet("notwins_bound", id, "not 2-connected");
    if (!is_bipartite(g)) return unmet("notwins_bound", id, "not bipartite");
    const DistanceMatrix d = shortest_path_metric(g);
    if (!twin_pairs(d).empty()) return unmet("notwins_bound", id, "has a pair of twins");

    const Distance2Census c = distance2_census(g, d);
    v.metrics = {{"n", g.n()}, {"ell2", c.ell2}};
    if (c.ell2 < g.n()) {
        v.status = Status::Fail;
        v.witness = {{"reason", "fewer distance-2 lines than vertices"}};
        return v;
    }

    const GAssignment a = construct_g(g);
    if (!a.complete()) {
        v.status = Status::Fail;
        v.witness = {{"reason", "partner construction got stuck"},
                     {"stuck_vertex", *a.stuck_vertex}};
        return v;
    }
    if (auto dup = find_line_collision(a)) {
        v.status = Status::Fail;
        v.witness = {{"reason", "line map not injective"},
                     {"vertices", json::array({dup->first, dup->second})}};
        return v;
    }
    // Width bookkeeping: the assigned line repeats exactly for dominating
    // vertices away from long cycles.
    const ProofSets ps = compute_proof_sets(g, d, c);
    for (int u = 0; u < g.n(); ++u) {
        const bool wide = c.width_of(a.f_line[u]) > 1;
        const bool expected = ps.X.contains(u) && !ps.W.contains(u);
        if (wide != expected) {
            v.status = Status::Fail;
            v.witness = {{"reason", "assigned line width disagrees with vertex class"},
                         {"vertex", u}};
            return v;
        }
    }
    return v;
}

Verdict check_up_bound(const DistanceMatrix& d, const std::string& id) {
    Verdict v{"up_bound", id, Status::Pass, nullptr, {}};
    if (d.n() < 3) return unmet("up_bound", id, "need at least three points");
    if (!is_valid_metric(d) || !is_k_metric(d, 2)) return unmet("up_bound", id, "not a 2-metric");
    const LineCensus c = line_census(d);
    v.metrics = {{"n", d.n()},
                 {"ell", c.ell},
                 {"ell_star", c.ell_star},
                 {"up", c.universal_pair_count}};
    if (c.ell_star + c.universal_pair_count < d.n()) {
        v.status = Status::Fail;
        v.witness = {{"reason", "ell_star + up below point count"}};
    }
    return v;
}

namespace {

struct FamilyContext {
    VertexSet F, S, full;
    std::set<VertexSet> vF, vS, Sstar, FS;
    int up_F = 0, up_S = 0, up_minus_v = 0, up_total = 0;
};

FamilyContext build_families(const DistanceMatrix& d, int v) {
    FamilyContext fc;
    fc.full = VertexSet::full(d.n());
    fc.F = d.at_distance(v, 1);
    fc.S = d.at_distance(v, 2);
    fc.F.for_each([&](int x) {
        const VertexSet l = line_points(d, v, x);
        if (l == fc.full)
            ++fc.up_F;
        else
            fc.vF.insert(l);
    });
    fc.S.for_each([&](int y) {
        const VertexSet l = line_points(d, v, y);
        if (l == fc.full)
            ++fc.up_S;
        else
            fc.vS.insert(l);
    });
    fc.S.for_each([&](int y) {
        fc.S.for_each([&](int w) {
            if (y < w) fc.Sstar.insert(line_points(d, y, w));
        });
    });
    fc.F.for_each([&](int x) {
        const VertexSet lvx = line_points(d, v, x);
        fc.S.for_each([&](int z) {
            bool qualifies = false;
            fc.S.for_each([&](int y) {
                if (qualifies) return;
                if (line_points(d, v, y) == lvx && !line_points(d, x, y).contains(z))
                    qualifies = true;
            });
            if (qualifies) fc.FS.insert(line_points(d, x, z));
        });
    });
    for (auto [a, b] : universal_pairs(d)) {
        ++fc.up_total;
        if (a != v && b != v) ++fc.up_minus_v;
    }
    return fc;
}

}  // namespace

Verdict check_line_families(const DistanceMatrix& d, int v, const std::string& id) {
    Verdict out{"line_families", id, Status::Pass, nullptr, {}};
    if (d.n() < 3) return unmet("line_families", id, "need at least three points");
    if (!is_valid_metric(d) || !is_k_metric(d, 2))
        return unmet("line_families", id, "not a 2-metric");

    const int n = d.n();
    const FamilyContext fc = build_families(d, v);
    const bool twin_free = twin_pairs(d).empty();

    auto fail = [&](const std::string& clause, json detail) {
        out.status = Status::Fail;
        detail["clause"] = clause;
        detail["base_point"] = v;
        out.witness = std::move(detail);
        return out;
    };

    // Repeated lines through a common point force distinct distances or a
    // twin pair at distance one.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (x == v || y == v) continue;
            if (!(line_points(d, v, x) == line_points(d, v, y))) continue;
            const bool ok = d(v, x) != d(v, y) ||
                            (metric_twins(d, x, y) && d(v, x) == 1 && d(v, y) == 1);
            if (!ok) return fail("repeated_line_distance", {{"x", x}, {"y", y}});
        }

    // A line to a distance-2 point holds no other distance-2 point.
    for (int y = fc.S.first(); y >= 0; y = fc.S.next(y)) {
        const VertexSet inter = line_points(d, v, y) & fc.S;
        if (!(inter == VertexSet::single(y)))
            return fail("distance2_point_unique", {{"y", y}, {"got", set_json(inter)}});
    }

    // A shared line between a neighbor and a distance-2 point pins down the
    // distance-2 point.
    for (int y = fc.S.first(); y >= 0; y = fc.S.next(y))
        for (int x = fc.F.first(); x >= 0; x = fc.F.next(x)) {
            if (!(line_points(d, v, y) == line_points(d, v, x))) continue;
            for (int z = fc.S.first(); z >= 0; z = fc.S.next(z)) {
                if (d(x, z) != 1 || !line_points(d, x, y).contains(z)) continue;
                if (z != y) return fail("pinned_partner", {{"x", x}, {"y", y}, {"z", z}});
            }
        }

    // Family cardinalities against universal-pair counts.
    if (fc.up_total != fc.up_minus_v + fc.up_S + fc.up_F)
        return fail("universal_pair_split", {{"up", fc.up_total},
                                             {"up_minus_v", fc.up_minus_v},
                                             {"up_S", fc.up_S},
                                             {"up_F", fc.up_F}});
    if (static_cast<int>(fc.vS.size()) != fc.S.count() - fc.up_S)
        return fail("vS_count", {{"vS", fc.vS.size()}, {"S", fc.S.count()}, {"up_S", fc.up_S}});
    if (twin_free && static_cast<int>(fc.vF.size()) != fc.F.count() - fc.up_F)
        return fail("vF_count", {{"vF", fc.vF.size()}, {"F", fc.F.count()}, {"up_F", fc.up_F}});

    // Every FS line sits inside F plus one distance-2 point.
    for (const VertexSet& l : fc.FS) {
        bool captured = false;
        for (int z = fc.S.first(); z >= 0 && !captured; z = fc.S.next(z)) {
            VertexSet box = fc.F;
            box.add(z);
            captured = l.is_subset_of(box);
        }
        if (!captured) return fail("fs_capture", {{"line", set_json(l)}});
    }
    if (!fc.FS.empty() && fc.S.count() < 2)
        return fail("fs_needs_two", {{"S", fc.S.count()}});

    // Disjointness of the families.
    for (const VertexSet& l : fc.FS)
        if (fc.vS.count(l) || fc.vF.count(l))
            return fail("family_overlap", {{"line", set_json(l)}, {"family", "FS"}});
    for (const VertexSet& l : fc.Sstar)
        if (fc.vS.count(l) || fc.vF.count(l))
            return fail("family_overlap", {{"line", set_json(l)}, {"family", "S*"}});

    // Exchange bound and the cover bound.
    std::set<VertexSet> vf_and_vs;
    for (const VertexSet& l : fc.vF)
        if (fc.vS.count(l)) vf_and_vs.insert(l);
    if (static_cast<int>(fc.FS.size()) + fc.up_minus_v < static_cast<int>(vf_and_vs.size()))
        return fail("exchange_bound",
                    {{"FS", fc.FS.size()}, {"up_minus_v", fc.up_minus_v},
                     {"vF_cap_vS", vf_and_vs.size()}});
    std::set<VertexSet> cover = fc.vF;
    cover.insert(fc.vS.begin(), fc.vS.end());
    cover.insert(fc.FS.begin(), fc.FS.end());
    if (static_cast<int>(cover.size()) + fc.up_total < n - 1)
        return fail("cover_bound", {{"cover", cover.size()}, {"up", fc.up_total}});

    for (const VertexSet& l : fc.Sstar)
        if (fc.FS.count(l)) return fail("star_fs_overlap", {{"line", set_json(l)}});

    out.metrics = {{"n", n},
                   {"F", fc.F.count()},
                   {"S", fc.S.count()},
                   {"vF", static_cast<std::int64_t>(fc.vF.size())},
                   {"vS", static_cast<std::int64_t>(fc.vS.size())},
                   {"S_star", static_cast<std::int64_t>(fc.Sstar.size())},
                   {"FS", static_cast<std::int64_t>(fc.FS.size())},
                   {"up", fc.up_total}};
    return out;
}

Verdict check_line_families_all(const DistanceMatrix& d, const std::string& id) {
    Verdict agg{"line_families", id, Status::PreconditionUnmet,
                json{{"reason", "no applicable base point"}}, {}};
    for (int v = 0; v < d.n(); ++v) {
        Verdict one = check_line_families(d, v, id);
        if (one.status == Status::Fail) return one;
        if (one.status == Status::Pass && agg.status != Status::Pass) {
            agg = std::move(one);
            agg.metrics.erase("F");
            agg.metrics.erase("S");
        }
    }
    return agg;
}

namespace {

// Relations after deleting twin `vp` while keeping `v`.
json twin_relations_violation(const DistanceMatrix& d, const LineCensus& census_m, int v, int vp,
                              std::map<std::string, std::int64_t>& metrics) {
    const int n = d.n();
    const DistanceMatrix mp = restrict_metric(d, vp);
    const int nv = v < vp ? v : v - 1;
    auto old_id = [&](int i) { return i < vp ? i : i + 1; };

    const VertexSet full_p = VertexSet::full(n - 1);
    VertexSet u_set, w_set;
    for (int u = 0; u < n - 1; ++u) {
        if (u == nv || mp(nv, u) != 2) continue;
        if (line_points(mp, nv, u) == full_p)
            u_set.add(u);
        else
            w_set.add(u);
    }
    const LineCensus census_p = line_census(mp);
    metrics["ell_star_m"] = census_m.ell_star;
    metrics["ell_star_mp"] = census_p.ell_star;
    metrics["up_m"] = census_m.universal_pair_count;
    metrics["up_mp"] = census_p.universal_pair_count;
    metrics["U"] = u_set.count();
    metrics["W"] = w_set.count();

    if (census_m.ell_star < census_p.ell_star + 2 * u_set.count() + w_set.count())
        return {{"relation", "ell_star_drop"},
                {"kept", v},
                {"removed", vp},
                {"ell_star_m", census_m.ell_star},
                {"ell_star_mp", census_p.ell_star},
                {"U", u_set.count()},
                {"W", w_set.count()}};

    const VertexSet full_m = VertexSet::full(n);
    for (auto [x, y] : universal_pairs(mp)) {
        const bool contains_v = x == nv || y == nv;
        const bool universal_in_m = line_points(d, old_id(x), old_id(y)) == full_m;
        if (!contains_v && !universal_in_m)
            return {{"relation", "universal_pair_survives"},
                    {"kept", v},
                    {"removed", vp},
                    {"pair", json::array({old_id(x), old_id(y)})}};
        if (!universal_in_m) {
            const int partner = x == nv ? y : x;
            if (!u_set.contains(partner))
                return {{"relation", "lost_pair_outside_U"},
                        {"kept", v},
                        {"removed", vp},
                        {"pair", json::array({old_id(x), old_id(y)})}};
        }
    }
    if (census_p.universal_pair_count > census_m.universal_pair_count + u_set.count())
        return {{"relation", "up_transfer"},
                {"kept", v},
                {"removed", vp},
                {"up_m", census_m.universal_pair_count},
                {"up_mp", census_p.universal_pair_count},
                {"U", u_set.count()}};
    return nullptr;
}

}  // namespace

Verdict check_twin_removal(const DistanceMatrix& d, const std::string& id) {
    Verdict out{"twin_removal", id, Status::Pass, nullptr, {}};
    if (d.n() < 3) return unmet("twin_removal", id, "need at least three points");
    if (!is_valid_metric(d) || !is_k_metric(d, 2))
        return unmet("twin_removal", id, "not a 2-metric");
    const auto twins = twin_pairs(d);
    if (twins.empty()) return unmet("twin_removal", id, "no twin pair");

    const int n = d.n();
    const LineCensus census_m = line_census(d);
    out.metrics["twin_pairs"] = static_cast<std::int64_t>(twins.size());

    auto fail = [&](json w) {
        out.status = Status::Fail;
        out.witness = std::move(w);
        return out;
    };

    // Restriction never creates lines: ell_star is monotone under point removal.
    for (int a = 0; a < n; ++a) {
        if (n - 1 < 2) break;
        const LineCensus sub = line_census(restrict_metric(d, a));
        if (census_m.ell_star < sub.ell_star)
            return fail({{"relation", "ell_star_monotone"}, {"removed", a}});
    }

    const VertexSet full = VertexSet::full(n);
    for (auto [v, vp] : twins) {
        // Twins are interchangeable on every line avoiding them.
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (x == v || x == vp || y == v || y == vp) continue;
                const VertexSet l = line_points(d, x, y);
                if (l.contains(v) != l.contains(vp))
                    return fail({{"relation", "twin_interchange"},
                                 {"pair", json::array({v, vp})},
                                 {"generators", json::array({x, y})}});
            }
        // A twin adjacent to everything else forms a universal pair.
        bool all_ones = true;
        for (int u = 0; u < n && all_ones; ++u)
            if (u != v && u != vp) all_ones = d(v, u) == 1;
        if (all_ones && !(line_points(d, v, vp) == full))
            return fail({{"relation", "adjacent_twin_universal"}, {"pair", json::array({v, vp})}});

        for (auto [keep, drop] : {std::pair{v, vp}, std::pair{vp, v}}) {
            json w = twin_relations_violation(d, census_m, keep, drop, out.metrics);
            if (!w.is_null()) return fail(std::move(w));
        }
    }
    return out;
}

namespace {

// Lazily shared per-instance data for the structural bundle.
struct StructuralContext {
    const Graph& g;
    DistanceMatrix d;
    Distance2Census census;
    StructureSummary summary;
    std::vector<VertexSet> n2;
    std::vector<std::vector<int>> cycles4;  // chordless cycles of length >= 4
    bool cycles_ready = false;

    explicit StructuralContext(const Graph& g_)
        : g(g_), d(shortest_path_metric(g_)), census(collect_distance2_lines(g_, d)),
          summary(structure_summary(g_)) {
        n2.reserve(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) n2.push_back(d.at_distance(v, 2));
    }

    const std::vector<std::vector<int>>& chordless_cycles() {
        if (!cycles_ready) {
            cycles4 = enumerate_induced_cycles(g, 4);
            cycles_ready = true;
        }
        return cycles4;
    }

    bool on_common_cycle(int x, int s, int length) {
        for (const auto& cyc : chordless_cycles()) {
            if (static_cast<int>(cyc.size()) != length) continue;
            bool has_x = false, has_s = false;
            for (int v : cyc) {
                has_x = has_x || v == x;
                has_s = has_s || v == s;
            }
            if (has_x && has_s) return true;
        }
        return false;
    }
};

bool is_complete_bipartite(const Graph& g, const StructureSummary& st) {
    if (!st.bipartition) return false;
    const auto& color = *st.bipartition;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (color[u] != color[v] && !g.has_edge(u, v)) return false;
    return true;
}

}  // namespace

Verdict check_structural(const Graph& g, const std::string& id) {
    Verdict out{"structural", id, Status::Pass, nullptr, {}};
    if (!is_connected(g)) return unmet("structural", id, "not connected");
    StructuralContext cx(g);
    const int n = g.n();
    const VertexSet full = VertexSet::full(n);
    const bool bipartite = cx.summary.bipartition.has_value();
    const bool biconnected = cx.summary.is_biconnected;
    const auto twins = twin_pairs(cx.d);

    auto fail = [&](const std::string& clause, json detail) {
        out.status = Status::Fail;
        detail["clause"] = clause;
        out.witness = std::move(detail);
        return out;
    };

    // Inside the line of a distance-2 pair, the far sides are separated by
    // either endpoint and by the common neighborhood.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (cx.d(x, y) != 2) continue;
            const VertexSet line = line_points(cx.d, x, y);
            const VertexSet common = g.neighbors(x) & g.neighbors(y);
            VertexSet far_y, far_x;  // delta -2 / +2 within the line
            line.for_each([&](int v) {
                const int dl = cx.d(y, v) - cx.d(x, v);
                if (dl == -2) far_y.add(v);
                if (dl == 2) far_x.add(v);
            });
            for (int a = far_y.first(); a >= 0; a = far_y.next(a))
                for (int b = far_x.first(); b >= 0; b = far_x.next(b)) {
                    VertexSet cut_x = line;
                    cut_x.remove(x);
                    if (b != x && connected_in_subgraph(g, cut_x, a, b))
                        return fail("line_cut",
                                    {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"removed", "x"}});
                    VertexSet cut_y = line;
                    cut_y.remove(y);
                    if (a != y && connected_in_subgraph(g, cut_y, a, b))
                        return fail("line_cut",
                                    {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"removed", "y"}});
                    if (connected_in_subgraph(g, line - common, a, b))
                        return fail("line_cut", {{"x", x},
                                                 {"y", y},
                                                 {"a", a},
                                                 {"b", b},
                                                 {"removed", "common_neighbors"}});
                }
            // Reaching x inside the line while avoiding y certifies alignment
            // beyond x (both orientations).
            for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                VertexSet avoid_q = line;
                avoid_q.remove(q);
                line.for_each([&](int z) {
                    if (out.status == Status::Fail || z == q || common.contains(z)) return;
                    if (connected_in_subgraph(g, avoid_q, z, p) &&
                        cx.d(z, q) != cx.d(z, p) + 2)
                        out.status = Status::Fail;
                    if (out.status == Status::Fail && out.witness.is_null())
                        out.witness = {{"clause", "aligned_ray"},
                                       {"x", p},
                                       {"y", q},
                                       {"z", z}};
                });
                if (out.status == Status::Fail) return out;
            }
            // Universal distance-2 pairs in 2-connected graphs are twins
            // covering the graph with one neighborhood.
            if (biconnected && line == full) {
                VertexSet covered = g.neighbors(x);
                covered.add(x);
                covered.add(y);
                if (!metric_twins(cx.d, x, y) || !(covered == full))
                    return fail("universal_d2", {{"x", x}, {"y", y}});
            }
        }

    // Composition across a cut vertex of a bridgeless graph.
    if (cx.summary.bridge_count == 0 && cx.summary.is_connected &&
        !cx.summary.cut_vertices.empty()) {
        for (int v = cx.summary.cut_vertices.first(); v >= 0;
             v = cx.summary.cut_vertices.next(v)) {
            VertexSet rest = full;
            rest.remove(v);
            std::vector<VertexSet> comps;
            VertexSet remaining = rest;
            while (!remaining.empty()) {
                const int seed = remaining.first();
                VertexSet comp;
                std::vector<int> stack{seed};
                comp.add(seed);
                while (!stack.empty()) {
                    const int u = stack.back();
                    stack.pop_back();
                    ((g.neighbors(u) & rest) - comp).for_each([&](int w) {
                        comp.add(w);
                        stack.push_back(w);
                    });
                }
                comps.push_back(comp);
                remaining = remaining - comp;
            }
            const int c = static_cast<int>(comps.size());
            for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << c); mask += 2) {
                // Odd masks keep component 0 on one side, halving the splits.
                VertexSet side1;
                for (int i = 0; i < c; ++i)
                    if ((mask >> i) & 1) side1 |= comps[i];
                VertexSet side2 = rest - side1;
                side1.add(v);
                side2.add(v);
                std::vector<int> ids1, ids2;
                const Graph g1 = induced_subgraph(g, side1, &ids1);
                const Graph g2 = induced_subgraph(g, side2, &ids2);
                const int e1 = collect_distance2_lines(g1, shortest_path_metric(g1)).ell2;
                const int e2 = collect_distance2_lines(g2, shortest_path_metric(g2)).ell2;
                const int d1 = (g.neighbors(v) & side1).count();
                const int d2 = (g.neighbors(v) & side2).count();
                if (cx.census.ell2 < e1 + e2 - 1 + d1 * d2)
                    return fail("cut_vertex_bound", {{"cut_vertex", v},
                                                     {"ell2", cx.census.ell2},
                                                     {"ell2_side1", e1},
                                                     {"ell2_side2", e2},
                                                     {"deg1", d1},
                                                     {"deg2", d2}});
            }
        }
    }

    // Two generator pairs of one line, aligned: domination or a cut vertex at
    // the outer ends, equal far distances, and a common chordless cycle.
    if (bipartite) {
        for (const Line& line : cx.census.lines) {
            if (line.width() < 2) continue;
            for (const auto& ga : line.generators)
                for (const auto& gb : line.generators) {
                    if (ga == gb) continue;
                    for (auto [x, y] : {ga, std::pair{ga.second, ga.first}})
                        for (auto [s, t] : {gb, std::pair{gb.second, gb.first}}) {
                            if (!yxst_holds(cx.d, y, x, s, t)) continue;
                            const bool y_ok = cx.summary.cut_vertices.contains(y) ||
                                              dominates(g, x, y);
                            const bool t_ok = cx.summary.cut_vertices.contains(t) ||
                                              dominates(g, s, t);
                            if (!y_ok || !t_ok)
                                return fail("equal_line_pairs",
                                            {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                             {"part", "cut_or_dominated"}});
                            if (!biconnected) continue;
                            const int ref = cx.d(x, t);
                            if (cx.d(y, s) != ref)
                                return fail("equal_line_pairs",
                                            {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                             {"part", "far_distance"}});
                            bool bad = false;
                            cx.n2[y].for_each([&](int z) {
                                bad = bad || cx.d(z, t) != ref;
                            });
                            cx.n2[t].for_each([&](int w) {
                                bad = bad || cx.d(w, y) != ref;
                            });
                            if (bad)
                                return fail("equal_line_pairs",
                                            {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                             {"part", "far_distance"}});
                            for (int z = cx.n2[y].first(); z >= 0; z = cx.n2[y].next(z)) {
                                if (z == x) continue;
                                for (int m = 0; m < n; ++m)
                                    if (cx.d(z, t) == cx.d(z, m) + cx.d(m, t) &&
                                        cx.d(m, s) != cx.d(m, t))
                                        return fail("equal_line_pairs",
                                                    {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                                     {"part", "midpoint"}, {"mid", m}});
                            }
                            for (int w = cx.n2[t].first(); w >= 0; w = cx.n2[t].next(w)) {
                                if (w == s) continue;
                                for (int m = 0; m < n; ++m)
                                    if (cx.d(y, w) == cx.d(y, m) + cx.d(m, w) &&
                                        cx.d(m, y) != cx.d(m, x))
                                        return fail("equal_line_pairs",
                                                    {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                                     {"part", "midpoint"}, {"mid", m}});
                            }
                            if (!cx.on_common_cycle(x, s, 2 * (cx.d(x, s) + 2)))
                                return fail("equal_line_pairs",
                                            {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                             {"part", "common_cycle"},
                                             {"length", 2 * (cx.d(x, s) + 2)}});
                        }
                }
        }
    }

    // In the twin-free 2-connected bipartite case, distinct generator pairs of
    // one line sit far apart, and the far labeling is aligned.
    if (biconnected && bipartite && twins.empty()) {
        for (const Line& line : cx.census.lines) {
            if (line.width() < 2) continue;
            for (std::size_t i = 0; i < line.generators.size(); ++i)
                for (std::size_t j = i + 1; j < line.generators.size(); ++j) {
                    const auto ga = line.generators[i];
                    const auto gb = line.generators[j];
                    const int beta =
                        std::max({cx.d(ga.first, gb.first), cx.d(ga.first, gb.second),
                                  cx.d(ga.second, gb.first), cx.d(ga.second, gb.second)});
                    if (beta < 4)
                        return fail("generator_distance",
                                    {{"pair1", json::array({ga.first, ga.second})},
                                     {"pair2", json::array({gb.first, gb.second})},
                                     {"beta", beta}});
                    for (auto [pa, pb] : {std::pair{ga, gb}, std::pair{gb, ga}})
                        for (auto [x, y] : {pa, std::pair{pa.second, pa.first}})
                            for (auto [s, t] : {pb, std::pair{pb.second, pb.first}})
                                if (cx.d(y, t) == beta && !yxst_holds(cx.d, y, x, s, t))
                                    return fail("generator_distance",
                                                {{"x", x}, {"y", y}, {"s", s}, {"t", t},
                                                 {"part", "max_labeling_aligned"}});
                }
        }

        const ProofSets ps = compute_proof_sets(g, cx.d, cx.census);
        if (ps.X.intersects(ps.Y))
            return fail("xy_disjoint",
                        {{"X", set_json(ps.X)}, {"Y", set_json(ps.Y)}});
        for (int x = ps.X.first(); x >= 0; x = ps.X.next(x))
            for (int u = ps.y_for[x].first(); u >= 0; u = ps.y_for[x].next(u)) {
                const VertexSet zs = cx.n2[u] & ps.y_for[x];
                for (int z = zs.first(); z >= 0; z = zs.next(z)) {
                    if (z == u) continue;
                    if (!ps.W.contains(u) || !ps.W.contains(z))
                        return fail("long_cycle_membership", {{"x", x}, {"u", u}, {"z", z}});
                }
            }
    }

    // Twin deletion: the remaining graph is isometric, its lines extend by at
    // most the deleted twin, and a bridge of the deleted graph is a pendant
    // edge at the surviving twin.
    if (!twins.empty()) {
        for (auto [a, b] : twins)
            for (auto [v2, v1] : {std::pair{a, b}, std::pair{b, a}}) {
                // v1 removed, v2 kept
                std::vector<int> old_ids;
                const Graph gp = delete_vertex(g, v1, &old_ids);
                if (!is_connected(gp))
                    return fail("twin_deletion", {{"removed", v1}, {"part", "connectivity"}});
                const DistanceMatrix dp = shortest_path_metric(gp);
                for (int i = 0; i < gp.n(); ++i)
                    for (int j = i + 1; j < gp.n(); ++j)
                        if (dp(i, j) != cx.d(old_ids[i], old_ids[j]))
                            return fail("twin_deletion",
                                        {{"removed", v1}, {"part", "isometry"},
                                         {"pair", json::array({old_ids[i], old_ids[j]})}});
                for (int i = 0; i < gp.n(); ++i)
                    for (int j = i + 1; j < gp.n(); ++j) {
                        if (dp(i, j) != 2) continue;
                        VertexSet inner;  // line of the deleted graph, in old ids
                        line_points(dp, i, j).for_each([&](int w) { inner.add(old_ids[w]); });
                        const VertexSet outer = line_points(cx.d, old_ids[i], old_ids[j]);
                        VertexSet extended = inner;
                        extended.add(v1);
                        if (!(outer == inner) && !(outer == extended))
                            return fail("twin_deletion",
                                        {{"removed", v1}, {"part", "line_extension"},
                                         {"pair", json::array({old_ids[i], old_ids[j]})}});
                        if (outer.contains(v1) && !outer.contains(v2))
                            return fail("twin_deletion",
                                        {{"removed", v1}, {"part", "twin_membership"},
                                         {"pair", json::array({old_ids[i], old_ids[j]})}});
                    }
                VertexSet closed = g.neighbors(v2);
                closed.add(v1);
                closed.add(v2);
                if (!(line_points(cx.d, v1, v2) == closed))
                    return fail("twin_deletion",
                                {{"removed", v1}, {"part", "twin_line_shape"}});
                if (biconnected) {
                    const StructureSummary sp = structure_summary(gp);
                    for (auto [u, w] : sp.bridges) {
                        const bool ok = (old_ids[u] == v2 && gp.degree(w) == 1) ||
                                        (old_ids[w] == v2 && gp.degree(u) == 1);
                        if (!ok)
                            return fail("twin_bridge",
                                        {{"removed", v1},
                                         {"bridge", json::array({old_ids[u], old_ids[w]})}});
                    }
                    if (bipartite && !is_complete_bipartite(g, cx.summary)) {
                        VertexSet t_candidates = cx.n2[v1];
                        t_candidates.remove(v2);
                        if (t_candidates.empty())
                            return fail("twin_deletion",
                                        {{"removed", v1}, {"part", "missing_far_point"}});
                        std::set<VertexSet> lines_p;  // lines of G from pairs avoiding v1
                        for (int i = 0; i < gp.n(); ++i)
                            for (int j = i + 1; j < gp.n(); ++j)
                                if (cx.d(old_ids[i], old_ids[j]) == 2)
                                    lines_p.insert(
                                        line_points(cx.d, old_ids[i], old_ids[j]));
                        for (int t = t_candidates.first(); t >= 0;
                             t = t_candidates.next(t)) {
                            const VertexSet lt = line_points(cx.d, v1, t);
                            if (lt.contains(v2) || lines_p.count(lt))
                                return fail("twin_deletion",
                                            {{"removed", v1}, {"part", "far_line_new"},
                                             {"t", t}});
                        }
                    }
                }
            }
    }

    out.metrics = {{"n", n},
                   {"ell2", cx.census.ell2},
                   {"br", cx.summary.bridge_count},
                   {"twin_pairs", static_cast<std::int64_t>(twins.size())}};
    return out;
}

Verdict check_exceptional_graphs(const std::string& fixture_name) {
    const auto& names = exceptional_fixture_names();
    if (std::find(names.begin(), names.end(), fixture_name) == names.end())
        throw std::invalid_argument("check_exceptional_graphs: unknown fixture '" + fixture_name +
                                    "'");
    const Fixture* f = find_fixture(fixture_name);
    const DistanceMatrix d = shortest_path_metric(f->graph);
    const LineCensus c = line_census(d);
    const StructureSummary st = structure_summary(f->graph);

    Verdict v{"exceptional_graphs", fixture_name, Status::Pass, nullptr, {}};
    v.metrics = {{"n", f->graph.n()},
                 {"ell", c.ell},
                 {"br", st.bridge_count},
                 {"up", c.universal_pair_count}};
    if (c.ell + st.bridge_count >= f->graph.n() || c.universal_pair_count < 2) {
        v.status = Status::Fail;
        v.witness = {{"reason", "expected ell + br < n and at least two universal pairs"}};
    }
    return v;
}

}  // namespace mlines
