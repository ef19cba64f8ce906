#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "vset.hpp"

namespace edgecoh {

/// Prime component P_S(H) = <x_i, y_i : i in S> + sum of 2-minor ideals of the
/// cliques. The cliques partition {1..n} minus S; they are nonempty, pairwise
/// disjoint and sorted by smallest vertex (canonical form).
struct PrimeIdeal {
    int n = 0;
    Vset s;
    std::vector<Vset> cliques;

    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// Krull dimension of A/P_S(H): every clique of size m contributes m+1.
inline int krull_dim(const PrimeIdeal& p) {
    int d = 0;
    for (Vset c : p.cliques) d += c.count() + 1;
    return d;
}

inline PrimeIdeal make_prime(int n, Vset s, std::vector<Vset> cliques) {
    std::sort(cliques.begin(), cliques.end(), [](Vset a, Vset b) { return a.min() < b.min(); });
    Vset seen = s;
    for (Vset c : cliques) {
        if (c.empty()) throw internal_error("prime ideal: empty clique");
        if (c.intersects(seen)) throw internal_error("prime ideal: overlapping cliques");
        seen = seen | c;
    }
    if (seen != Vset::full(n)) throw internal_error("prime ideal: cliques do not cover the complement of S");
    return PrimeIdeal{n, s, std::move(cliques)};
}

// Total order giving all listings a reproducible layout: (|S|, S lex, cliques lex).
inline bool canon_less(const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.s.count() != b.s.count()) return a.s.count() < b.s.count();
    if (a.s != b.s) return lex_less(a.s, b.s);
    if (a.cliques.size() != b.cliques.size()) return a.cliques.size() < b.cliques.size();
    for (std::size_t i = 0; i < a.cliques.size(); ++i)
        if (a.cliques[i] != b.cliques[i]) return lex_less(a.cliques[i], b.cliques[i]);
    return false;
}

/// Sum of prime components, in general no longer prime. The binomial part is the
/// edge union of the summands' cliques with S-vertices removed; it splits into
/// connected component graphs over disjoint vertex sets, sorted by smallest vertex.
struct SumComponent {
    Vset verts;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    friend bool operator==(const SumComponent&, const SumComponent&) = default;
};

struct SumIdeal {
    int n = 0;
    Vset s;
    std::vector<SumComponent> comps;

    friend bool operator==(const SumIdeal&, const SumIdeal&) = default;
};

inline bool canon_less(const SumIdeal& a, const SumIdeal& b) {
    if (a.s.count() != b.s.count()) return a.s.count() < b.s.count();
    if (a.s != b.s) return lex_less(a.s, b.s);
    if (a.comps.size() != b.comps.size()) return a.comps.size() < b.comps.size();
    for (std::size_t i = 0; i < a.comps.size(); ++i) {
        if (a.comps[i].verts != b.comps[i].verts) return lex_less(a.comps[i].verts, b.comps[i].verts);
        if (a.comps[i].edges != b.comps[i].edges) return a.comps[i].edges < b.comps[i].edges;
    }
    return false;
}

/// Sum of a nonempty family of prime components over the same ring.
inline SumIdeal sum_of(const std::vector<const PrimeIdeal*>& parts) {
    if (parts.empty()) throw internal_error("sum_of: empty family");
    const int n = parts.front()->n;
    Vset s;
    for (const PrimeIdeal* p : parts) s = s | p->s;
    std::vector<Vset> adj(static_cast<std::size_t>(n));
    for (const PrimeIdeal* p : parts) {
        for (Vset c : p->cliques) {
            Vset cp = c - s;
            if (cp.count() < 2) continue;
            for_each_vertex(cp, [&](int v) { adj[static_cast<std::size_t>(v) - 1] =
                                                 adj[static_cast<std::size_t>(v) - 1] | (cp - Vset::single(v)); });
        }
    }
    SumIdeal out{n, s, {}};
    for (Vset comp : components_within(adj, Vset::full(n) - s)) {
        SumComponent sc{comp, {}};
        for_each_vertex(comp, [&](int u) {
            for_each_vertex(adj[static_cast<std::size_t>(u) - 1] & comp, [&](int v) {
                if (v > u) sc.edges.emplace_back(u, v);
            });
        });
        out.comps.push_back(std::move(sc));
    }
    return out;
}

inline SumIdeal sum(const PrimeIdeal& a, const PrimeIdeal& b) { return sum_of({&a, &b}); }

/// A sum is prime exactly when every component graph is complete.
inline bool is_prime(const SumIdeal& x) {
    for (const SumComponent& c : x.comps) {
        int k = c.verts.count();
        if (static_cast<int>(c.edges.size()) != k * (k - 1) / 2) return false;
    }
    return true;
}

inline PrimeIdeal to_prime(const SumIdeal& x) {
    if (!is_prime(x)) throw internal_error("to_prime: sum is not prime");
    std::vector<Vset> cliques;
    for (const SumComponent& c : x.comps) cliques.push_back(c.verts);
    return make_prime(x.n, x.s, std::move(cliques));
}

inline SumIdeal to_sum(const PrimeIdeal& p) {
    std::vector<SumComponent> comps;
    for (Vset c : p.cliques) {
        SumComponent sc{c, {}};
        for_each_vertex(c, [&](int u) {
            for_each_vertex(c, [&](int v) {
                if (v > u) sc.edges.emplace_back(u, v);
            });
        });
        comps.push_back(std::move(sc));
    }
    return SumIdeal{p.n, p.s, std::move(comps)};
}

/// Ideal containment I_p >= I_q for prime components.
/// Needs q.s inside p.s, and every q-clique to survive deletion of p.s either as
/// at most one vertex or inside a single p-clique.
inline bool contains(const PrimeIdeal& p, const PrimeIdeal& q) {
    if (!q.s.subset_of(p.s)) return false;
    for (Vset c : q.cliques) {
        Vset cp = c - p.s;
        if (cp.count() <= 1) continue;
        bool inside = false;
        for (Vset d : p.cliques)
            if (cp.subset_of(d)) { inside = true; break; }
        if (!inside) return false;
    }
    return true;
}

/// Ideal containment I_p >= I_q for sums. A minor Delta_ab lies in p exactly when
/// a or b hits p.s or ab is an edge of p's binomial part (degree-2 spans of the
/// component ideals are independent across components).
inline bool contains(const SumIdeal& p, const SumIdeal& q) {
    if (!q.s.subset_of(p.s)) return false;
    std::vector<Vset> padj(static_cast<std::size_t>(p.n));
    for (const SumComponent& c : p.comps)
        for (auto [u, v] : c.edges) {
            padj[static_cast<std::size_t>(u) - 1].add(v);
            padj[static_cast<std::size_t>(v) - 1].add(u);
        }
    for (const SumComponent& c : q.comps)
        for (auto [u, v] : c.edges) {
            if (p.s.contains(u) || p.s.contains(v)) continue;
            if (!padj[static_cast<std::size_t>(u) - 1].contains(v)) return false;
        }
    return true;
}

namespace detail {

// Minimal primes of base_s-generators plus the sum of the edge ideals of the given
// connected component graphs: one choice of minimal support per component.
inline std::vector<PrimeIdeal> combine_minimal(int n, Vset base_s,
                                               const std::vector<std::pair<Vset, std::vector<Vset>>>& comps) {
    std::vector<std::vector<Vset>> supports;
    for (const auto& [verts, adj] : comps)
        supports.push_back(minimal_prime_supports_within(adj, verts));
    std::vector<PrimeIdeal> out;
    std::vector<std::size_t> pick(comps.size(), 0);
    for (;;) {
        Vset s = base_s;
        std::vector<Vset> cliques;
        for (std::size_t t = 0; t < comps.size(); ++t) {
            Vset st = supports[t][pick[t]];
            s = s | st;
            for (Vset c : components_within(comps[t].second, comps[t].first - st))
                cliques.push_back(c);
        }
        out.push_back(make_prime(n, s, std::move(cliques)));
        std::size_t t = 0;
        while (t < comps.size() && ++pick[t] == supports[t].size()) pick[t++] = 0;
        if (t == comps.size()) break;
    }
    // The construction yields pairwise incomparable primes; drop any violator defensively.
    std::vector<PrimeIdeal> kept;
    for (const PrimeIdeal& p : out) {
        bool dominated = false;
        for (const PrimeIdeal& q : out)
            if (!(q == p) && contains(p, q)) { dominated = true; break; }
        if (!dominated) kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return canon_less(a, b); });
    return kept;
}

}  // namespace detail

/// Minimal primes of the binomial edge ideal J_G, connected or not.
inline std::vector<PrimeIdeal> minimal_primes(const Graph& g) {
    std::vector<std::pair<Vset, std::vector<Vset>>> comps;
    for (Vset verts : components_within(g.adj, Vset::full(g.n))) comps.emplace_back(verts, g.adj);
    return detail::combine_minimal(g.n, Vset(), comps);
}

/// Minimal primary decomposition of a sum of prime components (all components are
/// radical here, so this is the list of minimal primes over the sum).
inline std::vector<PrimeIdeal> decompose(const SumIdeal& x) {
    std::vector<std::pair<Vset, std::vector<Vset>>> comps;
    for (const SumComponent& c : x.comps) {
        std::vector<Vset> adj(static_cast<std::size_t>(x.n));
        for (auto [u, v] : c.edges) {
            adj[static_cast<std::size_t>(u) - 1].add(v);
            adj[static_cast<std::size_t>(v) - 1].add(u);
        }
        comps.emplace_back(c.verts, std::move(adj));
    }
    return detail::combine_minimal(x.n, x.s, comps);
}

/// Display form: the S block, then the nontrivial cliques as J(...); "(0)" if nothing.
inline std::string display(const PrimeIdeal& p) {
    std::string out;
    auto list = [](Vset v) {
        std::string s = "{";
        bool first = true;
        for_each_vertex(v, [&](int x) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        });
        return s + "}";
    };
    if (!p.s.empty()) out += "<x_i,y_i : i in " + list(p.s) + ">";
    for (Vset c : p.cliques) {
        if (c.count() < 2) continue;
        if (!out.empty()) out += " + ";
        out += "J(" + list(c) + ")";
    }
    return out.empty() ? "(0)" : out;
}

}  // namespace edgecoh
