#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homology.hpp"
#include "ideal.hpp"

namespace edgecoh {

/// Hilbert series fragment P(u) / (1-u)^d in the variable u = t^{-1}, with exact
/// integer coefficients. Canonical form: trailing zero coefficients stripped and,
/// while d > 0, common factors (1-u) divided out (detected by P(1) = 0).
struct RationalSeries {
    std::vector<Int> num;  // num[k] is the coefficient of u^k
    int dpow = 0;
};

inline void normalize(RationalSeries& s) {
    while (!s.num.empty() && s.num.back() == 0) s.num.pop_back();
    if (s.num.empty()) {
        s.dpow = 0;
        return;
    }
    while (s.dpow > 0) {
        Int at_one = 0;
        for (const Int& c : s.num) at_one += c;
        if (at_one != 0) break;
        // num = (1-u) q with q_k the prefix sums of num.
        std::vector<Int> q(s.num.size() - 1);
        Int acc = 0;
        for (std::size_t k = 0; k + 1 < s.num.size(); ++k) {
            acc += s.num[k];
            q[k] = acc;
        }
        s.num = std::move(q);
        --s.dpow;
        while (!s.num.empty() && s.num.back() == 0) s.num.pop_back();
        if (s.num.empty()) {
            s.dpow = 0;
            return;
        }
    }
}

inline RationalSeries series_zero() { return RationalSeries{}; }

inline RationalSeries series_const(Int c) {
    RationalSeries s{{std::move(c)}, 0};
    normalize(s);
    return s;
}

inline bool is_zero(const RationalSeries& s) { return s.num.empty(); }

inline bool operator==(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries x = a, y = b;
    normalize(x);
    normalize(y);
    return x.dpow == y.dpow && x.num == y.num;
}

inline RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out;
    out.dpow = std::max(a.dpow, b.dpow);
    // Scale each numerator by the missing (1-u) powers.
    auto scaled = [&](const RationalSeries& s) {
        std::vector<Int> v = s.num;
        for (int k = s.dpow; k < out.dpow; ++k) {
            std::vector<Int> w(v.size() + 1, Int(0));
            for (std::size_t i = 0; i < v.size(); ++i) {
                w[i] += v[i];
                w[i + 1] -= v[i];
            }
            v = std::move(w);
        }
        return v;
    };
    std::vector<Int> va = scaled(a), vb = scaled(b);
    out.num.assign(std::max(va.size(), vb.size()), Int(0));
    for (std::size_t i = 0; i < va.size(); ++i) out.num[i] += va[i];
    for (std::size_t i = 0; i < vb.size(); ++i) out.num[i] += vb[i];
    normalize(out);
    return out;
}

inline RationalSeries scale(const RationalSeries& a, const Int& c) {
    if (c == 0) return series_zero();
    RationalSeries out = a;
    for (Int& v : out.num) v *= c;
    return out;
}

inline RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
    if (is_zero(a) || is_zero(b)) return series_zero();
    RationalSeries out;
    out.dpow = a.dpow + b.dpow;
    out.num.assign(a.num.size() + b.num.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.num.size(); ++i)
        for (std::size_t j = 0; j < b.num.size(); ++j) out.num[i + j] += a.num[i] * b.num[j];
    normalize(out);
    return out;
}

/// Z-graded series of the top local cohomology of one clique block of size m:
/// ((m-1) u^m + u^{m+1}) / (1-u)^{m+1}. For m = 1 this is u^2/(1-u)^2.
inline RationalSeries factor_series(int m) {
    RationalSeries s;
    s.num.assign(static_cast<std::size_t>(m) + 2, Int(0));
    s.num[static_cast<std::size_t>(m)] = m - 1;
    s.num[static_cast<std::size_t>(m) + 1] = 1;
    s.dpow = m + 1;
    normalize(s);
    return s;
}

/// Product of the clique factors of a prime component; the S block contributes 1.
inline RationalSeries block_series(const PrimeIdeal& p) {
    RationalSeries s = series_const(1);
    for (Vset c : p.cliques) s = mul(s, factor_series(c.count()));
    return s;
}

/// Coefficients of u^0..u^N of the power series expansion.
inline std::vector<Int> expand(const RationalSeries& s, int trunc) {
    // 1/(1-u)^d is d-fold prefix summation applied to the numerator.
    std::vector<Int> acc(static_cast<std::size_t>(trunc) + 1, Int(0));
    for (std::size_t k = 0; k < acc.size() && k < s.num.size(); ++k) acc[k] = s.num[k];
    for (int d = 0; d < s.dpow; ++d)
        for (std::size_t k = 1; k < acc.size(); ++k) acc[k] += acc[k - 1];
    return acc;
}

/// Smallest u-power with nonzero coefficient of the canonical numerator, i.e. minus
/// the top t-degree of the series. Only meaningful for nonzero series.
inline int min_u_power(const RationalSeries& s) {
    RationalSeries c = s;
    normalize(c);
    for (std::size_t k = 0; k < c.num.size(); ++k)
        if (c.num[k] != 0) return static_cast<int>(k);
    throw internal_error("min_u_power: zero series");
}

/// Paper-style rendering, e.g. "(2t^-3 + t^-4)/(1 - t^-1)^4".
inline std::string to_string(const RationalSeries& s) {
    RationalSeries c = s;
    normalize(c);
    if (c.num.empty()) return "0";
    std::string num;
    for (std::size_t k = 0; k < c.num.size(); ++k) {
        if (c.num[k] == 0) continue;
        Int v = c.num[k];
        if (!num.empty()) {
            num += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        } else if (v < 0) {
            num += "-";
            v = -v;
        }
        if (v != 1 || k == 0) num += v.str();
        if (k > 0) num += "t^-" + std::to_string(k);
    }
    if (c.dpow == 0) return num;
    bool paren = false;
    for (char ch : num)
        if (ch == ' ') paren = true;
    std::string out = paren ? "(" + num + ")" : num;
    out += "/(1 - t^-1)";
    if (c.dpow > 1) out += "^" + std::to_string(c.dpow);
    return out;
}

/// Multigraded Hilbert table over the truncation box 0 <= k_i <= trunc, where k_i is
/// the exponent of u_i = t_i^{-1}. Keys pack five bits per coordinate.
struct MultiSeries {
    int n = 0;
    int trunc = 0;
    std::map<std::uint64_t, Int> coeff;
};

inline std::uint64_t pack_exponents(const std::vector<int>& k) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < k.size(); ++i) key |= std::uint64_t(k[i]) << (5 * i);
    return key;
}

inline std::vector<int> unpack_exponents(std::uint64_t key, int n) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = static_cast<int>((key >> (5 * i)) & 31);
    return k;
}

inline void check_multi_limits(int n, int trunc) {
    if (n > 12 || trunc > 31)
        throw std::invalid_argument("multigraded expansion supports n <= 12 and truncation <= 31");
    if (trunc < 1) throw std::invalid_argument("multigraded expansion needs truncation >= 1");
}

/// Table of the multidegree factor of one clique C of size m:
/// coefficient (m-1) + sum (k_j - 1) at every exponent vector with k_j >= 1 on C
/// and 0 elsewhere. Singleton cliques give the k-1 ramp in one variable pair.
inline MultiSeries multi_factor(const Vset clique, int n, int trunc) {
    check_multi_limits(n, trunc);
    MultiSeries ms{n, trunc, {}};
    std::vector<int> verts = clique.to_vector();
    const int m = static_cast<int>(verts.size());
    std::vector<int> k(verts.size(), 1);
    for (;;) {
        Int c = m - 1;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            c += k[i] - 1;
            key |= std::uint64_t(k[i]) << (5 * (verts[i] - 1));
        }
        if (c != 0) ms.coeff[key] = c;
        std::size_t i = 0;
        while (i < k.size() && ++k[i] > trunc) k[i++] = 1;
        if (i == k.size()) break;
    }
    return ms;
}

/// Product of tables with disjoint variable support (clique factors of one block).
inline MultiSeries multi_mul_disjoint(const MultiSeries& a, const MultiSeries& b, std::size_t limit = 1u << 23) {
    MultiSeries out{a.n, a.trunc, {}};
    if (a.coeff.size() > 0 && b.coeff.size() > limit / a.coeff.size())
        throw std::invalid_argument("multigraded expansion too large; reduce the truncation");
    for (const auto& [ka, va] : a.coeff)
        for (const auto& [kb, vb] : b.coeff) out.coeff[ka | kb] = va * vb;
    return out;
}

inline MultiSeries multi_block(const PrimeIdeal& p, int trunc) {
    check_multi_limits(p.n, trunc);
    MultiSeries out{p.n, trunc, {{0, Int(1)}}};
    for (Vset c : p.cliques) out = multi_mul_disjoint(out, multi_factor(c, p.n, trunc));
    return out;
}

inline void multi_add_scaled(MultiSeries& acc, const MultiSeries& inc, const Int& scale) {
    for (const auto& [k, v] : inc.coeff) {
        Int& slot = acc.coeff[k];
        slot += v * scale;
        if (slot == 0) acc.coeff.erase(k);
    }
}

inline Int multi_value(const MultiSeries& ms, const std::vector<int>& k) {
    auto it = ms.coeff.find(pack_exponents(k));
    return it == ms.coeff.end() ? Int(0) : it->second;
}

/// Total-degree collapse; entries above the box total are incomplete, so only
/// degrees up to trunc are returned.
inline std::vector<Int> multi_total_degree(const MultiSeries& ms) {
    std::vector<Int> out(static_cast<std::size_t>(ms.trunc) + 1, Int(0));
    for (const auto& [key, v] : ms.coeff) {
        int total = 0;
        for (int i = 0; i < ms.n; ++i) total += static_cast<int>((key >> (5 * i)) & 31);
        if (total <= ms.trunc) out[static_cast<std::size_t>(total)] += v;
    }
    return out;
}

}  // namespace edgecoh
