#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace chiforge {

// Hard cap on the vertex universe. Two 64-bit words cover every oracle
// stress size; the common n <= 64 case touches only the first word.
inline constexpr int kMaxVertices = 128;

class VertexSet {
public:
    constexpr VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    constexpr bool test(int v) const {
        return (words_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
    }
    constexpr void set(int v) { words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { words_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }
    constexpr bool empty() const { return words_[0] == 0 && words_[1] == 0; }
    constexpr bool any() const { return !empty(); }

    // Lowest member, or -1.
    constexpr int first() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    // Lowest member strictly greater than v, or -1.
    constexpr int next(int v) const {
        int from = v + 1;
        if (from >= kMaxVertices) return -1;
        if (from < 64) {
            std::uint64_t lo = words_[0] & (~std::uint64_t{0} << from);
            if (lo) return std::countr_zero(lo);
            if (words_[1]) return 64 + std::countr_zero(words_[1]);
            return -1;
        }
        std::uint64_t hi = words_[1] & (~std::uint64_t{0} << (from & 63));
        return hi ? 64 + std::countr_zero(hi) : -1;
    }

    constexpr VertexSet operator&(const VertexSet& o) const {
        return VertexSet{words_[0] & o.words_[0], words_[1] & o.words_[1]};
    }
    constexpr VertexSet operator|(const VertexSet& o) const {
        return VertexSet{words_[0] | o.words_[0], words_[1] | o.words_[1]};
    }
    constexpr VertexSet and_not(const VertexSet& o) const {
        return VertexSet{words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
    }
    constexpr VertexSet& operator&=(const VertexSet& o) {
        words_[0] &= o.words_[0];
        words_[1] &= o.words_[1];
        return *this;
    }
    constexpr VertexSet& operator|=(const VertexSet& o) {
        words_[0] |= o.words_[0];
        words_[1] |= o.words_[1];
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool is_subset_of(const VertexSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const {
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    struct iterator {
        const VertexSet* set;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = set->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
    std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace chiforge
