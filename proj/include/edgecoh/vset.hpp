#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace edgecoh {

// Subset of the vertex set {1,...,n}, n <= 64. Bit v-1 encodes vertex v.
struct Vset {
    std::uint64_t bits = 0;

    constexpr Vset() = default;
    constexpr explicit Vset(std::uint64_t b) : bits(b) {}

    static constexpr Vset single(int v) { return Vset(std::uint64_t(1) << (v - 1)); }
    static constexpr Vset full(int n) {
        return Vset(n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> (v - 1)) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    // Smallest vertex; only meaningful on a nonempty set.
    constexpr int min() const { return std::countr_zero(bits) + 1; }

    constexpr void add(int v) { bits |= std::uint64_t(1) << (v - 1); }
    constexpr void remove(int v) { bits &= ~(std::uint64_t(1) << (v - 1)); }

    constexpr bool subset_of(Vset o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(Vset o) const { return (bits & o.bits) != 0; }

    friend constexpr Vset operator|(Vset a, Vset b) { return Vset(a.bits | b.bits); }
    friend constexpr Vset operator&(Vset a, Vset b) { return Vset(a.bits & b.bits); }
    friend constexpr Vset operator-(Vset a, Vset b) { return Vset(a.bits & ~b.bits); }
    friend constexpr bool operator==(Vset a, Vset b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(Vset a, Vset b) { return a.bits != b.bits; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }
};

// Visits the vertices of s in increasing order.
template <typename F>
inline void for_each_vertex(Vset s, F&& f) {
    for (std::uint64_t m = s.bits; m; m &= m - 1) f(std::countr_zero(m) + 1);
}

// Orders sets as their sorted element lists, so {1,3} < {2} and {1} < {1,3}.
inline bool lex_less(Vset a, Vset b) {
    while (a.bits && b.bits) {
        int x = std::countr_zero(a.bits), y = std::countr_zero(b.bits);
        if (x != y) return x < y;
        a.bits &= a.bits - 1;
        b.bits &= b.bits - 1;
    }
    return a.bits == 0 && b.bits != 0;
}

// (|S|, lexicographic) order used for support lists.
inline bool size_lex_less(Vset a, Vset b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return lex_less(a, b);
}

}  // namespace edgecoh
