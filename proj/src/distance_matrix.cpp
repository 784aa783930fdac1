#include "mlines/distance_matrix.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mlines/errors.hpp"

namespace mlines {

int DistanceMatrix::diameter() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m = std::max(m, (*this)(i, j));
    return m;
}

VertexSet DistanceMatrix::at_distance(int v, int r) const {
    VertexSet s;
    for (int u = 0; u < n_; ++u)
        if ((*this)(v, u) == r) s.add(u);
    return s;
}

std::string MetricViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NonzeroDiagonal:
            os << "nonzero diagonal at (" << i << "," << i << ")";
            break;
        case Kind::Asymmetry:
            os << "asymmetry: d(" << i << "," << j << ") != d(" << j << "," << i << ")";
            break;
        case Kind::OffDiagonalBelowOne:
            os << "off-diagonal entry below 1 at (" << i << "," << j << ")";
            break;
        case Kind::Triangle:
            os << "triangle violation at (" << i << "," << j << "," << k << "): d(" << i << ","
               << j << ") > d(" << i << "," << k << ") + d(" << k << "," << j << ")";
            break;
    }
    return os.str();
}

std::vector<MetricViolation> validate_metric(const DistanceMatrix& d) {
    std::vector<MetricViolation> out;
    const int n = d.n();
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) out.push_back({MetricViolation::Kind::NonzeroDiagonal, i, i, -1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(i, j) != d(j, i)) out.push_back({MetricViolation::Kind::Asymmetry, i, j, -1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(i, j) < 1 || d(j, i) < 1)
                out.push_back({MetricViolation::Kind::OffDiagonalBelowOne, i, j, -1});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (d(i, j) > d(i, k) + d(k, j))
                    out.push_back({MetricViolation::Kind::Triangle, i, j, k});
            }
    return out;
}

bool is_valid_metric(const DistanceMatrix& d) { return validate_metric(d).empty(); }

bool is_k_metric(const DistanceMatrix& d, int k) {
    if (k < 1) throw std::invalid_argument("is_k_metric: k must be positive");
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j)
            if (d(i, j) > k) return false;
    return true;
}

DistanceMatrix restrict_metric(const DistanceMatrix& d, int removed) {
    if (d.n() < 2) throw std::invalid_argument("restrict_metric: need at least two points");
    if (removed < 0 || removed >= d.n())
        throw std::invalid_argument("restrict_metric: point out of range");
    DistanceMatrix r(d.n() - 1);
    for (int i = 0, ri = 0; i < d.n(); ++i) {
        if (i == removed) continue;
        for (int j = 0, rj = 0; j < d.n(); ++j) {
            if (j == removed) continue;
            r.set_raw(ri, rj, d(i, j));
            ++rj;
        }
        ++ri;
    }
    return r;
}

DistanceMatrix read_distance_matrix(std::istream& in) {
    long long n = 0;
    if (!(in >> n)) throw ParseError("distance matrix: missing point count");
    if (n < 1) throw ParseError("distance matrix: point count must be at least 1");
    if (n > kMaxVertices)
        throw ParseError("distance matrix: point count exceeds build capacity of " +
                         std::to_string(kMaxVertices));
    DistanceMatrix d(static_cast<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long v;
            if (!(in >> v))
                throw ParseError("distance matrix: expected " + std::to_string(n * (n - 1) / 2) +
                                 " upper-triangle entries");
            d.set(i, j, static_cast<int>(v));
        }
    return d;
}

std::string write_distance_matrix(const DistanceMatrix& d) {
    std::ostringstream os;
    os << d.n() << '\n';
    for (int i = 0; i < d.n(); ++i) {
        bool row = false;
        for (int j = i + 1; j < d.n(); ++j) {
            os << (row ? " " : "") << d(i, j);
            row = true;
        }
        if (row) os << '\n';
    }
    return os.str();
}

}  // namespace mlines
