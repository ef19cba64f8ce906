#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "hochster.hpp"

namespace edgecoh {

// ---------------------------------------------------------------------------
// Generic initial ideal side. gin(J_G) is squarefree and monomial in the 2n
// variables x_1..x_n, y_1..y_n; ground vertex i-1 encodes x_i and n+i-1
// encodes y_i. Everything here is the independent classical-Hochster route
// used to cross-check the poset engine.
// ---------------------------------------------------------------------------

/// Squarefree monomial, stored as its x- and y-supports.
struct Monomial {
    Vset xs, ys;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = a.xs.count() + a.ys.count(), db = b.xs.count() + b.ys.count();
    if (da != db) return da < db;
    if (a.xs != b.xs) return lex_less(a.xs, b.xs);
    return lex_less(a.ys, b.ys);
}

inline bool divides(const Monomial& a, const Monomial& b) {
    return a.xs.subset_of(b.xs) && a.ys.subset_of(b.ys);
}

inline std::string display(const Monomial& m) {
    std::string out;
    for_each_vertex(m.xs, [&](int v) { out += "x" + std::to_string(v); });
    for_each_vertex(m.ys, [&](int v) { out += "y" + std::to_string(v); });
    return out.empty() ? "1" : out;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), monomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : out)
            if (divides(h, g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

/// gin of a prime component: the S variables plus, in each clique, all products
/// x_a x_b of two clique members.
inline std::vector<Monomial> gin_prime(const PrimeIdeal& p) {
    std::vector<Monomial> gens;
    for_each_vertex(p.s, [&](int i) {
        gens.push_back({Vset::single(i), Vset()});
        gens.push_back({Vset(), Vset::single(i)});
    });
    for (Vset c : p.cliques)
        for_each_vertex(c, [&](int a) {
            for_each_vertex(c, [&](int b) {
                if (b > a) gens.push_back({Vset::single(a) | Vset::single(b), Vset()});
            });
        });
    std::sort(gens.begin(), gens.end(), monomial_less);
    return gens;
}

/// Stanley-Reisner complex of gin(P_S(H)) on the 2n ground vertices: keep all
/// y_j and singleton-clique x_j away from S, and one x per larger clique.
inline SimplicialComplex sr_complex_of_prime(const PrimeIdeal& p) {
    const int n = p.n;
    std::uint64_t base = 0;
    std::vector<Vset> big;
    for_each_vertex(Vset::full(n) - p.s, [&](int j) { base |= std::uint64_t(1) << (n + j - 1); });
    for (Vset c : p.cliques) {
        if (c.count() == 1)
            base |= std::uint64_t(1) << (c.min() - 1);
        else
            big.push_back(c);
    }
    std::vector<std::uint64_t> facets;
    std::vector<int> pick(big.size(), 0);
    for (;;) {
        std::uint64_t f = base;
        for (std::size_t t = 0; t < big.size(); ++t)
            f |= std::uint64_t(1) << (big[t].to_vector()[static_cast<std::size_t>(pick[t])] - 1);
        facets.push_back(f);
        std::size_t t = 0;
        while (t < big.size() && ++pick[t] == big[t].count()) pick[t++] = 0;
        if (t == big.size()) break;
    }
    return make_complex(2 * n, std::move(facets));
}

/// Stanley-Reisner complex of gin(J_G): union over the minimal primes.
inline SimplicialComplex sr_complex_of_gin(const Graph& g) {
    std::vector<std::uint64_t> facets;
    for (const PrimeIdeal& p : minimal_primes(g))
        for (std::uint64_t f : sr_complex_of_prime(p).facets) facets.push_back(f);
    return make_complex(2 * g.n, std::move(facets));
}

/// Minimal generators of gin(J_G) as the minimal non-faces of the union complex.
inline std::vector<Monomial> gin_ideal(const Graph& g) {
    if (g.n > 11) throw std::invalid_argument("gin_ideal: supported only for n <= 11");
    SimplicialComplex delta = sr_complex_of_gin(g);
    const int nv = 2 * g.n;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << nv); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Monomial> gens;
    for (std::uint64_t m : masks) {
        if (m == 0 || is_face(delta, m)) continue;
        bool minimal = true;
        for (std::uint64_t t = m; t && minimal; t &= t - 1)
            if (!is_face(delta, m & ~(t & ~(t - 1)))) minimal = false;
        if (!minimal) continue;
        Monomial mono;
        for (int i = 0; i < g.n; ++i) {
            if ((m >> i) & 1) mono.xs.add(i + 1);
            if ((m >> (g.n + i)) & 1) mono.ys.add(i + 1);
        }
        gens.push_back(mono);
    }
    return minimalize(std::move(gens));
}

/// Path description of the gin generators: x_i x_j y_a1 .. y_av over the simple
/// paths of G, minimalized by divisibility.
inline std::vector<Monomial> gin_path_generators(const Graph& g) {
    std::vector<Monomial> gens;
    for (const SimplePath& p : simple_paths(g)) {
        Monomial m{Vset::single(p.i) | Vset::single(p.j), Vset()};
        for (int a : p.interior) m.ys.add(a);
        gens.push_back(m);
    }
    return minimalize(std::move(gens));
}

struct GinDiscrepancy {
    std::vector<Monomial> only_in_gin;
    std::vector<Monomial> only_in_paths;

    bool empty() const { return only_in_gin.empty() && only_in_paths.empty(); }
};

/// The two generator routes are reported side by side and never reconciled.
inline GinDiscrepancy gin_discrepancy(const Graph& g) {
    auto a = gin_ideal(g);
    auto b = gin_path_generators(g);
    GinDiscrepancy d;
    for (const Monomial& m : a)
        if (std::find(b.begin(), b.end(), m) == b.end()) d.only_in_gin.push_back(m);
    for (const Monomial& m : b)
        if (std::find(a.begin(), a.end(), m) == a.end()) d.only_in_paths.push_back(m);
    return d;
}

// ---------------------------------------------------------------------------
// Classical Hochster formula on a squarefree monomial quotient: the Z^{2n}
// graded piece of H^r at a <= 0 with support F has dimension
// dim H~^{r-|F|-1}(link F), so everything is determined by the link
// cohomology of the faces.
// ---------------------------------------------------------------------------

/// Link cohomology per face: entry i of the vector is dim H~^{i-1}(link F).
struct FaceCohomology {
    std::uint64_t face = 0;
    std::vector<long> h;
};

inline std::vector<FaceCohomology> link_cohomology_table(const SimplicialComplex& delta, FieldSpec field) {
    std::vector<FaceCohomology> table;
    for (std::uint64_t f : faces(delta)) {
        SimplicialComplex lk = link(delta, f);
        std::vector<std::uint64_t> lfaces = faces(lk);
        if (has_cone_point(lk)) {
            // Cones are acyclic; the reduced Euler characteristic must agree.
            if (euler_characteristic_reduced(lfaces) != 0)
                throw internal_error("link table: cone with nonzero Euler characteristic");
            continue;
        }
        std::vector<long> h = reduced_cohomology_dims(lfaces, field);
        bool nonzero = false;
        for (long v : h) nonzero = nonzero || v != 0;
        if (nonzero) table.push_back({f, std::move(h)});
    }
    return table;
}

/// dim_K H^r_m(A/I_Delta)_a for one multidegree a of Z^{2n} (entries <= 0 required
/// for a nonzero answer; the support of a must be a face).
inline long hochster_graded_dim(const SimplicialComplex& delta, int r, const std::vector<int>& a,
                                FieldSpec field) {
    std::uint64_t supp = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) return 0;
        if (a[i] < 0) supp |= std::uint64_t(1) << i;
    }
    if (!is_face(delta, supp)) return 0;
    int want = r - std::popcount(supp);  // degree want-1 of the link
    if (want < 0) return 0;
    std::vector<long> h = reduced_cohomology_dims(faces(link(delta, supp)), field);
    return static_cast<std::size_t>(want) < h.size() ? h[static_cast<std::size_t>(want)] : 0;
}

/// Z-graded series of every H^r of A/gin: each face F with link cohomology in
/// degree r-|F|-1 contributes (u/(1-u))^{|F|}.
inline std::map<int, RationalSeries> classical_z_series(const std::vector<FaceCohomology>& table) {
    std::map<int, RationalSeries> out;
    for (const FaceCohomology& fc : table) {
        const int fsz = std::popcount(fc.face);
        for (std::size_t k = 0; k < fc.h.size(); ++k) {
            if (fc.h[k] == 0) continue;
            int r = fsz + static_cast<int>(k);
            RationalSeries s;
            s.num.assign(static_cast<std::size_t>(fsz) + 1, Int(0));
            s.num[static_cast<std::size_t>(fsz)] = fc.h[k];
            s.dpow = fsz;
            auto it = out.find(r);
            if (it == out.end())
                out[r] = s;
            else
                it->second = add(it->second, s);
        }
    }
    return out;
}

/// Hilbert series of the Stanley-Reisner ring itself, rewritten in u = t^{-1}:
/// each face of size j contributes (t/(1-t))^j = (-1)^j / (1-u)^j.
inline RationalSeries sr_ring_hilbert_series_u(const SimplicialComplex& delta) {
    std::vector<long> fvec;  // fvec[j] = number of faces of size j
    for (std::uint64_t f : faces(delta)) {
        std::size_t j = static_cast<std::size_t>(std::popcount(f));
        if (fvec.size() <= j) fvec.resize(j + 1, 0);
        fvec[j]++;
    }
    const int d = static_cast<int>(fvec.size()) - 1;
    RationalSeries out;
    for (int j = 0; j <= d; ++j) {
        if (fvec[static_cast<std::size_t>(j)] == 0) continue;
        // (-1)^j (1-u)^{d-j} / (1-u)^d
        RationalSeries term{{Int(j % 2 == 0 ? 1 : -1)}, 0};
        std::vector<Int> pow{Int(1)};
        for (int k = 0; k < d - j; ++k) {
            std::vector<Int> next(pow.size() + 1, Int(0));
            for (std::size_t i = 0; i < pow.size(); ++i) {
                next[i] += pow[i];
                next[i + 1] -= pow[i];
            }
            pow = std::move(next);
        }
        term.num.assign(pow.begin(), pow.end());
        if (j % 2 != 0)
            for (Int& c : term.num) c = -c;
        term.dpow = d;
        term = scale(term, Int(fvec[static_cast<std::size_t>(j)]));
        out = add(out, term);
    }
    normalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// Z^n coarsening. Collapsing t_{x_i}, t_{y_i} -> t_i turns every graded dimension
// function into a combination of three per-coordinate sequences in k_i = -a_i:
// status 0: 1 at k=0; status 1 (one variable of the pair): 1 for k >= 1;
// status 2 (both): k-1 for k >= 1. Both the engine formula and the classical
// oracle expand in this basis, which makes exact degreewise comparison cheap.
// ---------------------------------------------------------------------------

using TauVector = std::map<int, std::unordered_map<std::uint64_t, long long>>;  // r -> packed status -> weight

namespace detail {

inline void tau_add(TauVector& tv, int r, std::uint64_t key, long long w) {
    if (w == 0) return;
    auto& slot = tv[r][key];
    slot += w;
    if (slot == 0) tv[r].erase(key);
}

}  // namespace detail

/// Engine side: expand M_{r,q} times the clique factors. Each clique of size m
/// splits as (m-1) * (all pairs single) + sum over members (that pair doubled).
inline TauVector engine_tau(const CohomologyProfile& pr) {
    TauVector tv;
    for (const auto& [key, m] : pr.mult) {
        const PrimeIdeal& q = pr.Q.elems[static_cast<std::size_t>(key.second)];
        std::vector<std::pair<std::uint64_t, long long>> terms{{0, m}};
        for (Vset c : q.cliques) {
            std::vector<std::pair<std::uint64_t, long long>> next;
            std::uint64_t all_single = 0;
            for_each_vertex(c, [&](int v) { all_single |= std::uint64_t(1) << (2 * (v - 1)); });
            for (const auto& [tk, tw] : terms) {
                if (c.count() > 1) next.emplace_back(tk | all_single, tw * (c.count() - 1));
                for_each_vertex(c, [&](int v) {
                    std::uint64_t k = tk | all_single;
                    k &= ~(std::uint64_t(1) << (2 * (v - 1)));
                    k |= std::uint64_t(2) << (2 * (v - 1));
                    next.emplace_back(k, tw);
                });
            }
            terms = std::move(next);
        }
        for (const auto& [tk, tw] : terms) detail::tau_add(tv, key.first, tk, tw);
    }
    return tv;
}

/// Oracle side: every face F of the gin complex contributes its link cohomology
/// with the pair statuses read off from which of x_i, y_i lie in F.
inline TauVector oracle_tau(const std::vector<FaceCohomology>& table, int n) {
    TauVector tv;
    for (const FaceCohomology& fc : table) {
        std::uint64_t key = 0;
        for (int i = 0; i < n; ++i) {
            int st = static_cast<int>((fc.face >> i) & 1) + static_cast<int>((fc.face >> (n + i)) & 1);
            key |= std::uint64_t(st) << (2 * i);
        }
        const int fsz = std::popcount(fc.face);
        for (std::size_t k = 0; k < fc.h.size(); ++k)
            if (fc.h[k] != 0) detail::tau_add(tv, fsz + static_cast<int>(k), key, fc.h[k]);
    }
    return tv;
}

namespace detail {

// Accumulates w * product of per-coordinate basis sequences into a dense table
// over the box [0..N]^n, linear index sum k_i (N+1)^i.
inline void tau_accumulate(std::vector<long long>& table, std::uint64_t key, long long w, int n, int N) {
    std::vector<long long> strides(static_cast<std::size_t>(n));
    long long s = 1;
    for (int i = 0; i < n; ++i) {
        strides[static_cast<std::size_t>(i)] = s;
        s *= N + 1;
    }
    std::function<void(int, long long, long long)> rec = [&](int i, long long base, long long weight) {
        if (i == n) {
            table[static_cast<std::size_t>(base)] += weight;
            return;
        }
        int st = static_cast<int>((key >> (2 * i)) & 3);
        if (st == 0) {
            rec(i + 1, base, weight);
        } else if (st == 1) {
            for (int k = 1; k <= N; ++k) rec(i + 1, base + k * strides[static_cast<std::size_t>(i)], weight);
        } else {
            for (int k = 2; k <= N; ++k)
                rec(i + 1, base + k * strides[static_cast<std::size_t>(i)], weight * (k - 1));
        }
    };
    rec(0, 0, w);
}

inline long long tau_value_at(const TauVector& tv, int r, const std::vector<int>& k) {
    auto it = tv.find(r);
    if (it == tv.end()) return 0;
    long long total = 0;
    for (const auto& [key, w] : it->second) {
        long long prod = w;
        for (std::size_t i = 0; i < k.size() && prod != 0; ++i) {
            int st = static_cast<int>((key >> (2 * i)) & 3);
            if (st == 0)
                prod *= k[i] == 0 ? 1 : 0;
            else if (st == 1)
                prod *= k[i] >= 1 ? 1 : 0;
            else
                prod *= k[i] >= 2 ? k[i] - 1 : 0;
        }
        total += prod;
    }
    return total;
}

}  // namespace detail

struct VerifyMismatch {
    int r = 0;
    std::vector<int> degree;  // the multidegree a, entries <= 0
    long long engine = 0;
    long long oracle = 0;
};

struct VerifyResult {
    bool pass = false;
    int trunc = 0;
    FieldSpec field;
    std::vector<int> checked_r;
    bool has_mismatch = false;
    VerifyMismatch mismatch;
};

/// Degreewise comparison of the poset engine against the classical oracle over
/// the box 0 >= a_i >= -N. Boxes up to 2^26 cells are compared entry by entry;
/// beyond that the comparison happens in the shared basis, which is equivalent
/// for N >= 2 because the three coordinate sequences are linearly independent
/// on {0,-1,-2}.
inline VerifyResult verify_against_oracle(const Graph& g, FieldSpec field, int trunc) {
    if (trunc < 1) throw std::invalid_argument("verify: truncation must be at least 1");
    if (g.n > 32) throw std::invalid_argument("verify: supported only for n <= 32");
    CohomologyProfile pr = compute_profile(g, field);
    SimplicialComplex delta = sr_complex_of_gin(g);
    std::vector<FaceCohomology> table = link_cohomology_table(delta, field);
    TauVector eng = engine_tau(pr);
    TauVector ora = oracle_tau(table, g.n);

    VerifyResult res;
    res.trunc = trunc;
    res.field = field;
    for (const auto& [r, m] : eng)
        if (!m.empty()) res.checked_r.push_back(r);
    for (const auto& [r, m] : ora)
        if (!m.empty() &&
            std::find(res.checked_r.begin(), res.checked_r.end(), r) == res.checked_r.end())
            res.checked_r.push_back(r);
    std::sort(res.checked_r.begin(), res.checked_r.end());

    long double cells_ld = 1;
    for (int i = 0; i < g.n; ++i) cells_ld *= trunc + 1;
    const bool dense = cells_ld <= static_cast<long double>(1u << 26);

    res.pass = true;
    for (int r : res.checked_r) {
        if (dense) {
            long long cells = 1;
            for (int i = 0; i < g.n; ++i) cells *= trunc + 1;
            std::vector<long long> te(static_cast<std::size_t>(cells), 0), to(static_cast<std::size_t>(cells), 0);
            auto ite = eng.find(r);
            if (ite != eng.end())
                for (const auto& [key, w] : ite->second) detail::tau_accumulate(te, key, w, g.n, trunc);
            auto ito = ora.find(r);
            if (ito != ora.end())
                for (const auto& [key, w] : ito->second) detail::tau_accumulate(to, key, w, g.n, trunc);
            for (long long idx = 0; idx < cells; ++idx) {
                if (te[static_cast<std::size_t>(idx)] == to[static_cast<std::size_t>(idx)]) continue;
                res.pass = false;
                res.has_mismatch = true;
                res.mismatch.r = r;
                res.mismatch.engine = te[static_cast<std::size_t>(idx)];
                res.mismatch.oracle = to[static_cast<std::size_t>(idx)];
                long long rest = idx;
                for (int i = 0; i < g.n; ++i) {
                    res.mismatch.degree.push_back(-static_cast<int>(rest % (trunc + 1)));
                    rest /= trunc + 1;
                }
                return res;
            }
        } else {
            // Compare in the shared basis; scan for a witness only on failure.
            auto diff = eng.count(r) ? eng.at(r) : std::unordered_map<std::uint64_t, long long>{};
            if (ora.count(r))
                for (const auto& [key, w] : ora.at(r)) {
                    diff[key] -= w;
                    if (diff[key] == 0) diff.erase(key);
                }
            if (diff.empty()) continue;
            std::vector<int> k(static_cast<std::size_t>(g.n), 0);
            for (;;) {
                long long e = detail::tau_value_at(eng, r, k);
                long long o = detail::tau_value_at(ora, r, k);
                if (e != o) {
                    res.pass = false;
                    res.has_mismatch = true;
                    res.mismatch.r = r;
                    res.mismatch.engine = e;
                    res.mismatch.oracle = o;
                    for (int v : k) res.mismatch.degree.push_back(-v);
                    return res;
                }
                std::size_t i = 0;
                while (i < k.size() && ++k[i] > trunc) k[i++] = 0;
                if (i == k.size()) break;
            }
        }
    }
    return res;
}

/// Blocks of the decomposition realized on the gin side: for every (r, q) with
/// M_{r,q} > 0, the Z-graded series of H^{d_q}(A/gin(I_q)) from the classical
/// formula on the block's own Stanley-Reisner complex.
inline std::map<std::pair<int, int>, RationalSeries> main2_decomposition(const CohomologyProfile& pr) {
    std::map<std::pair<int, int>, RationalSeries> out;
    for (const auto& [key, m] : pr.mult) {
        const PrimeIdeal& q = pr.Q.elems[static_cast<std::size_t>(key.second)];
        auto series = classical_z_series(link_cohomology_table(sr_complex_of_prime(q), pr.field));
        auto it = series.find(krull_dim(q));
        out[key] = it == series.end() ? series_zero() : it->second;
    }
    return out;
}

}  // namespace edgecoh
