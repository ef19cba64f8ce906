#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace edgecoh {

/// Poset of sums of minimal primes, ordered by reverse inclusion: i precedes j
/// (below[i][j]) when I_i strictly contains I_j. Minimal primes sit at the top.
struct PosetP {
    int n = 0;
    std::vector<SumIdeal> elems;  // canonical order
    std::vector<std::vector<char>> below;
};

/// Same order on the prime closure Q.
struct PosetQ {
    int n = 0;
    std::vector<PrimeIdeal> elems;  // canonical order
    std::vector<std::vector<char>> below;
};

namespace detail {

template <typename Poset>
inline void fill_order(Poset& ps) {
    const std::size_t m = ps.elems.size();
    ps.below.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && contains(ps.elems[i], ps.elems[j])) {
                if (contains(ps.elems[j], ps.elems[i]))
                    throw internal_error("poset: distinct elements contain each other");
                ps.below[i][j] = 1;
            }
}

}  // namespace detail

/// All sums of nonempty subsets of the minimal primes of J_G.
inline PosetP build_P(const Graph& g) {
    auto mp = minimal_primes(g);
    if (mp.size() > 20) throw std::invalid_argument("build_P: too many minimal primes");
    std::set<SumIdeal, bool (*)(const SumIdeal&, const SumIdeal&)> uniq(
        [](const SumIdeal& a, const SumIdeal& b) { return canon_less(a, b); });
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << mp.size()); ++mask) {
        std::vector<const PrimeIdeal*> parts;
        for (std::size_t t = 0; t < mp.size(); ++t)
            if ((mask >> t) & 1) parts.push_back(&mp[t]);
        uniq.insert(sum_of(parts));
    }
    PosetP ps;
    ps.n = g.n;
    ps.elems.assign(uniq.begin(), uniq.end());
    detail::fill_order(ps);
    return ps;
}

/// Prime closure: subset-sums of the minimal primes, keeping the prime ones and
/// recursing into the decomposition of every non-prime sum until nothing new appears.
inline PosetQ build_Q(const Graph& g) {
    auto cmp_p = [](const PrimeIdeal& a, const PrimeIdeal& b) { return canon_less(a, b); };
    auto cmp_s = [](const SumIdeal& a, const SumIdeal& b) { return canon_less(a, b); };
    std::set<PrimeIdeal, decltype(cmp_p)> found(cmp_p);
    auto cmp_fam = [cmp_p](const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), cmp_p);
    };
    std::set<std::vector<PrimeIdeal>, decltype(cmp_fam)> visited(cmp_fam);  // families already closed over
    std::set<SumIdeal, decltype(cmp_s)> decomposed(cmp_s);

    std::function<void(std::vector<PrimeIdeal>)> closure = [&](std::vector<PrimeIdeal> gens) {
        std::sort(gens.begin(), gens.end(), cmp_p);
        if (!visited.insert(gens).second) return;
        if (gens.size() > 20) throw std::invalid_argument("build_Q: too many generators");
        std::set<SumIdeal, decltype(cmp_s)> sums(cmp_s);
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << gens.size()); ++mask) {
            std::vector<const PrimeIdeal*> parts;
            for (std::size_t t = 0; t < gens.size(); ++t)
                if ((mask >> t) & 1) parts.push_back(&gens[t]);
            sums.insert(sum_of(parts));
        }
        for (const SumIdeal& x : sums) {
            if (is_prime(x)) {
                found.insert(to_prime(x));
            } else if (decomposed.insert(x).second) {
                closure(decompose(x));
            }
        }
    };
    closure(minimal_primes(g));

    PosetQ ps;
    ps.n = g.n;
    ps.elems.assign(found.begin(), found.end());
    detail::fill_order(ps);
    return ps;
}

/// Open interval (q, 1): everything strictly above q, i.e. strictly contained in I_q.
/// Indices come back in canonical element order.
inline std::vector<int> open_interval(const PosetQ& ps, int q) {
    std::vector<int> out;
    for (std::size_t z = 0; z < ps.elems.size(); ++z)
        if (ps.below[static_cast<std::size_t>(q)][z]) out.push_back(static_cast<int>(z));
    return out;
}

/// Order complex of a sub-poset: vertices are the chosen elements, faces are the
/// chains, including the empty chain. Face masks index into verts.
struct OrderComplex {
    std::vector<int> verts;
    std::vector<std::uint64_t> faces;
};

inline OrderComplex order_complex(const PosetQ& ps, const std::vector<int>& elems) {
    if (elems.size() > 64) throw std::invalid_argument("order_complex: more than 64 elements");
    const int m = static_cast<int>(elems.size());
    std::vector<std::uint64_t> compat(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            std::size_t i = static_cast<std::size_t>(elems[static_cast<std::size_t>(a)]);
            std::size_t j = static_cast<std::size_t>(elems[static_cast<std::size_t>(b)]);
            if (ps.below[i][j] || ps.below[j][i]) compat[static_cast<std::size_t>(a)] |= std::uint64_t(1) << b;
        }
    OrderComplex oc;
    oc.verts = elems;
    oc.faces.push_back(0);
    // Chains are the cliques of the comparability relation; grow by ascending index.
    std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t chosen, std::uint64_t cand) {
        while (cand) {
            int p = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint64_t next = chosen | (std::uint64_t(1) << p);
            oc.faces.push_back(next);
            grow(next, cand & compat[static_cast<std::size_t>(p)]);
        }
    };
    grow(0, m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1);
    return oc;
}

/// Cover relations (transitive reduction), pairs (i, j) with i covered by j.
template <typename Poset>
inline std::vector<std::pair<int, int>> covers(const Poset& ps) {
    std::vector<std::pair<int, int>> out;
    const std::size_t m = ps.elems.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!ps.below[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < m && direct; ++k)
                if (ps.below[i][k] && ps.below[k][j]) direct = false;
            if (direct) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

/// Hasse diagram in DOT; arrows run upward from larger ideals toward minimal primes.
inline std::string hasse_dot(const PosetQ& ps) {
    std::string out = "digraph Q {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < ps.elems.size(); ++i)
        out += "  q" + std::to_string(i) + " [label=\"" + display(ps.elems[i]) +
               "\\ndim " + std::to_string(krull_dim(ps.elems[i])) + "\"];\n";
    for (auto [i, j] : covers(ps))
        out += "  q" + std::to_string(i) + " -> q" + std::to_string(j) + ";\n";
    return out + "}\n";
}

}  // namespace edgecoh
