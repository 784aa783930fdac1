#include "mlines/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "mlines/errors.hpp"

namespace mlines {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count out of range (capacity " +
                                    std::to_string(kMaxVertices) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    adj_[u].add(v);
    adj_[v].add(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

// Reachable set via frontier expansion on bitsets.
VertexSet reachable(const Graph& g, int start, const VertexSet& allowed) {
    VertexSet seen;
    if (!allowed.contains(start)) return seen;
    seen.add(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= allowed;
        next = next - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return reachable(g, 0, VertexSet::full(g.n())).count() == g.n();
}

DistanceMatrix shortest_path_metric(const Graph& g) {
    const int n = g.n();
    DistanceMatrix d(n);
    const VertexSet all = VertexSet::full(n);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        int dist = 0;
        while (!frontier.empty()) {
            frontier.for_each([&](int v) { d.set_raw(s, v, dist); });
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= all;
            next = next - seen;
            seen |= next;
            frontier = next;
            ++dist;
        }
        if (seen.count() != n) {
            int missing = (all - seen).first();
            throw std::invalid_argument("graph metric requires a connected graph: no path between " +
                                        std::to_string(s) + " and " + std::to_string(missing));
        }
    }
    return d;
}

VertexSet neighbors_at_distance(const Graph& g, int v, int r) {
    if (r < 0) throw std::invalid_argument("neighbors_at_distance: radius must be nonnegative");
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    int dist = 0;
    while (dist < r && !frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next = next - seen;
        seen |= next;
        frontier = next;
        ++dist;
    }
    return dist == r ? frontier : VertexSet{};
}

bool dominates(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("dominates: vertices must differ");
    return g.neighbors(y).is_subset_of(g.neighbors(x));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<int>* old_of_new) {
    std::vector<int> old_ids = keep.to_vector();
    std::vector<int> new_of_old(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_of_old[old_ids[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(old_ids.size()));
    for (int u : old_ids)
        (g.neighbors(u) & keep).for_each([&](int v) {
            if (u < v) h.add_edge(new_of_old[u], new_of_old[v]);
        });
    if (old_of_new) *old_of_new = std::move(old_ids);
    return h;
}

Graph delete_vertex(const Graph& g, int v, std::vector<int>* old_of_new) {
    VertexSet keep = VertexSet::full(g.n());
    keep.remove(v);
    return induced_subgraph(g, keep, old_of_new);
}

bool connected_in_subgraph(const Graph& g, const VertexSet& allowed, int a, int b) {
    if (!allowed.contains(a) || !allowed.contains(b)) return false;
    return reachable(g, a, allowed).contains(b);
}

namespace {

int graph6_byte(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw ParseError("graph6: byte out of printable range");
    return v;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty record");

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6: vertex counts above 258047 are not supported");
        if (text.size() < 4) throw ParseError("graph6: truncated vertex count");
        n = (static_cast<long long>(graph6_byte(text[1])) << 12) |
            (graph6_byte(text[2]) << 6) | graph6_byte(text[3]);
        pos = 4;
    } else {
        n = graph6_byte(text[0]);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: graph on " + std::to_string(n) +
                         " vertices exceeds build capacity of " + std::to_string(kMaxVertices));

    Graph g(static_cast<int>(n));
    const long long bits_needed = n * (n - 1) / 2;
    if (static_cast<long long>(text.size() - pos) * 6 < bits_needed)
        throw ParseError("graph6: truncated edge bits");
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = graph6_byte(text[pos + bit / 6]);
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int cur = 0;
    int used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>(63 + (cur << (6 - used))));
    return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header 'n m'");
    if (n < 0 || n > kMaxVertices)
        throw ParseError("edge list: vertex count out of range");
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace mlines
