#pragma once

#include <map>
#include <utility>
#include <vector>

#include "homology.hpp"
#include "poset.hpp"
#include "series.hpp"

namespace edgecoh {

// ---------------------------------------------------------------------------
// Hochster-type decomposition: H^r_m(A/J_G) decomposes as a direct sum of
// M_{r,q} copies of H^{d_q}(A/I_q) over the poset Q, where M_{r,q} is the
// dimension of the reduced cohomology of the open interval (q, 1) in degree
// r - d_q - 1.
// ---------------------------------------------------------------------------

struct CohomologyProfile {
    PosetQ Q;
    FieldSpec field;
    std::vector<int> dq;                            // Krull dimension per element
    std::map<std::pair<int, int>, long> mult;       // (r, element index) -> M > 0
    int depth = 0;
    int dim = 0;
    bool cohen_macaulay = false;
    bool buchsbaum = false;
};

inline CohomologyProfile compute_profile(const PosetQ& Q, FieldSpec field) {
    CohomologyProfile pr;
    pr.Q = Q;
    pr.field = field;
    for (const PrimeIdeal& p : Q.elems) pr.dq.push_back(krull_dim(p));
    for (std::size_t qi = 0; qi < Q.elems.size(); ++qi) {
        OrderComplex oc = order_complex(Q, open_interval(Q, static_cast<int>(qi)));
        std::vector<long> h = reduced_cohomology_dims(oc.faces, field);
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k] == 0) continue;
            int r = pr.dq[qi] + static_cast<int>(k);  // k indexes degree k-1
            pr.mult[{r, static_cast<int>(qi)}] = h[k];
        }
    }
    if (pr.mult.empty()) throw internal_error("profile: no cohomology at all");
    pr.depth = pr.mult.begin()->first.first;
    pr.dim = 0;
    int max_dq = 0;
    for (const auto& [key, m] : pr.mult) pr.dim = std::max(pr.dim, key.first);
    for (int d : pr.dq) max_dq = std::max(max_dq, d);
    if (pr.dim != max_dq)
        throw internal_error("profile: top cohomology does not sit in the Krull dimension");
    pr.cohen_macaulay = true;
    pr.buchsbaum = true;
    for (const auto& [key, m] : pr.mult) {
        if (key.first == pr.dim) continue;
        pr.cohen_macaulay = false;
        if (Q.elems[static_cast<std::size_t>(key.second)].s != Vset::full(Q.n)) pr.buchsbaum = false;
    }
    return pr;
}

inline CohomologyProfile compute_profile(const Graph& g, FieldSpec field) {
    return compute_profile(build_Q(g), field);
}

/// Z-graded Hilbert series of H^r_m(A/J_G): sum of M_{r,q} copies of the block series.
inline RationalSeries hilbert_series_z(const CohomologyProfile& pr, int r) {
    RationalSeries out;
    for (const auto& [key, m] : pr.mult) {
        if (key.first != r) continue;
        out = add(out, scale(block_series(pr.Q.elems[static_cast<std::size_t>(key.second)]), Int(m)));
    }
    return out;
}

/// Modules H^r actually present, ascending.
inline std::vector<int> cohomological_degrees(const CohomologyProfile& pr) {
    std::vector<int> rs;
    for (const auto& [key, m] : pr.mult)
        if (rs.empty() || rs.back() != key.first) rs.push_back(key.first);
    return rs;
}

/// Z^n-graded table of H^r up to the truncation box.
inline MultiSeries hilbert_series_zn(const CohomologyProfile& pr, int r, int trunc) {
    MultiSeries out{pr.Q.n, trunc, {}};
    for (const auto& [key, m] : pr.mult) {
        if (key.first != r) continue;
        multi_add_scaled(out, multi_block(pr.Q.elems[static_cast<std::size_t>(key.second)], trunc), Int(m));
    }
    return out;
}

/// Alternating sum over r of the Z-graded series; by the local-cohomology Euler
/// characteristic this equals the Hilbert series of A/J_G itself.
inline RationalSeries serre_alternating_sum(const CohomologyProfile& pr) {
    RationalSeries out;
    for (int r : cohomological_degrees(pr)) {
        RationalSeries s = hilbert_series_z(pr, r);
        out = add(out, r % 2 == 0 ? s : scale(s, Int(-1)));
    }
    return out;
}

struct RegularityReport {
    int series_based = 0;         // from the canonical numerators, authoritative
    int corrected_closed_form = 0;  // max r - d_q + #(cliques of size >= 2)
    int paper_literal = 0;          // max r - d_q
    bool agree = false;
};

inline RegularityReport regularity(const CohomologyProfile& pr) {
    RegularityReport rep;
    bool first = true;
    for (int r : cohomological_degrees(pr)) {
        RationalSeries s = hilbert_series_z(pr, r);
        if (is_zero(s)) continue;
        int val = r - min_u_power(s);
        rep.series_based = first ? val : std::max(rep.series_based, val);
        first = false;
    }
    bool first2 = true;
    for (const auto& [key, m] : pr.mult) {
        const PrimeIdeal& q = pr.Q.elems[static_cast<std::size_t>(key.second)];
        int big = 0;
        for (Vset c : q.cliques)
            if (c.count() >= 2) ++big;
        int corr = key.first - krull_dim(q) + big;
        int lit = key.first - krull_dim(q);
        rep.corrected_closed_form = first2 ? corr : std::max(rep.corrected_closed_form, corr);
        rep.paper_literal = first2 ? lit : std::max(rep.paper_literal, lit);
        first2 = false;
    }
    rep.agree = rep.series_based == rep.corrected_closed_form &&
                rep.series_based == rep.paper_literal;
    return rep;
}

}  // namespace edgecoh
