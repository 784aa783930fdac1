#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mlines/vertex_set.hpp"

namespace mlines {

// Finite metric with nonnegative integer distances. Entries are stored as a
// full n-by-n table; the symmetric setter is the normal write path, the raw
// one exists so validation can be exercised on broken data.
class DistanceMatrix {
    int n_ = 0;
    std::vector<int> d_;

public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }

    int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, int value) {
        d_[static_cast<std::size_t>(i) * n_ + j] = value;
        d_[static_cast<std::size_t>(j) * n_ + i] = value;
    }

    void set_raw(int i, int j, int value) { d_[static_cast<std::size_t>(i) * n_ + j] = value; }

    // Largest off-diagonal entry (0 for n < 2).
    int diameter() const;

    // Points at the given distance from v.
    VertexSet at_distance(int v, int r) const;

    bool operator==(const DistanceMatrix&) const = default;
};

struct MetricViolation {
    enum class Kind { NonzeroDiagonal, Asymmetry, OffDiagonalBelowOne, Triangle };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;  // intermediate point for triangle failures
    std::string describe() const;
};

// Every violated metric axiom, with indices; empty iff d is a valid metric.
std::vector<MetricViolation> validate_metric(const DistanceMatrix& d);
bool is_valid_metric(const DistanceMatrix& d);

// True iff every off-diagonal distance is at most k.
bool is_k_metric(const DistanceMatrix& d, int k);

// The metric on all points except `removed`; indices above it shift down.
DistanceMatrix restrict_metric(const DistanceMatrix& d, int removed);

// Text format: first line n, then the n(n-1)/2 strict-upper-triangle entries
// in row-major order, whitespace-separated.
DistanceMatrix read_distance_matrix(std::istream& in);
std::string write_distance_matrix(const DistanceMatrix& d);

}  // namespace mlines
