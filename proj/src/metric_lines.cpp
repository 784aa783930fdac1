#include "mlines/metric_lines.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mlines {

namespace {

// Accumulates lines keyed by point set; kept sorted so census output is
// deterministic without a separate pass.
void insert_line(std::vector<Line>& lines, const VertexSet& pts, int u, int v) {
    auto it = std::lower_bound(lines.begin(), lines.end(), pts,
                               [](const Line& l, const VertexSet& p) { return l.points < p; });
    if (it == lines.end() || !(it->points == pts))
        it = lines.insert(it, Line{pts, {}});
    it->generators.emplace_back(u, v);
}

}  // namespace

const Line* LineCensus::find(const VertexSet& points) const {
    auto it = std::lower_bound(lines.begin(), lines.end(), points,
                               [](const Line& l, const VertexSet& p) { return l.points < p; });
    if (it == lines.end() || !(it->points == points)) return nullptr;
    return &*it;
}

const Line* LineCensus::universal_line(int n) const { return find(VertexSet::full(n)); }

VertexSet line_points(const DistanceMatrix& d, int x, int y) {
    if (x == y) throw std::invalid_argument("line: the two generating points must differ");
    const int dxy = d(x, y);
    VertexSet pts;
    for (int z = 0; z < d.n(); ++z) {
        const int a = d(x, z);
        const int b = d(z, y);
        if (dxy == a + b || dxy == std::abs(a - b)) pts.add(z);
    }
    return pts;
}

Line line(const DistanceMatrix& d, int x, int y) {
    Line l{line_points(d, x, y), {}};
    l.generators.emplace_back(std::min(x, y), std::max(x, y));
    return l;
}

LineCensus line_census(const DistanceMatrix& d) {
    if (d.n() < 2) throw std::invalid_argument("line_census: need at least two points");
    LineCensus c;
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j) insert_line(c.lines, line_points(d, i, j), i, j);
    c.ell = static_cast<int>(c.lines.size());
    const Line* uni = c.universal_line(d.n());
    c.universal_pair_count = uni ? uni->width() : 0;
    c.ell_star = c.ell - (uni ? 1 : 0);
    return c;
}

std::vector<std::pair<int, int>> universal_pairs(const DistanceMatrix& d) {
    std::vector<std::pair<int, int>> out;
    const VertexSet all = VertexSet::full(d.n());
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j)
            if (line_points(d, i, j) == all) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> twin_pairs(const DistanceMatrix& d) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < d.n(); ++v)
        for (int w = v + 1; w < d.n(); ++w) {
            if (d(v, w) == 1) continue;
            bool twins = true;
            for (int u = 0; u < d.n() && twins; ++u) {
                if (u == v || u == w) continue;
                twins = d(v, u) == d(w, u);
            }
            if (twins) out.emplace_back(v, w);
        }
    return out;
}

}  // namespace mlines
