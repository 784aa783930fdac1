#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#ifndef MLINES_MAX_N
#define MLINES_MAX_N 64
#endif

namespace mlines {

// Compile-time vertex capacity. The default keeps a set in a single machine
// word; builds that need more points raise MLINES_MAX_N and get a multi-word
// set with the same interface.
inline constexpr int kMaxVertices = MLINES_MAX_N;

class VertexSet {
    static constexpr int kWords = (kMaxVertices + 63) / 64;
    std::array<std::uint64_t, kWords> w_{};

public:
    constexpr VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    void add(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    void clear() { w_.fill(0); }

    bool operator==(const VertexSet&) const = default;

    // Total order treating the set as one wide unsigned integer.
    bool operator<(const VertexSet& o) const {
        for (int i = kWords - 1; i >= 0; --i)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    // Set difference.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Smallest element, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Smallest element strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int i = v >> 6;
        std::uint64_t cur = w_[i] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur) return i * 64 + std::countr_zero(cur);
            if (++i >= kWords) return -1;
            cur = w_[i];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_el = true;
        for_each([&](int v) {
            if (!first_el) s += ',';
            s += std::to_string(v);
            first_el = false;
        });
        s += '}';
        return s;
    }
};

}  // namespace mlines
