#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "complex.hpp"

namespace edgecoh {

using Int = boost::multiprecision::cpp_int;

/// Coefficient field: p = 0 means the rationals, otherwise the prime field F_p.
struct FieldSpec {
    std::uint32_t p = 0;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Accepts "q" or "fp:<p>" with p a prime below 2^31.
inline FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec{0};
    if (s.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        for (std::size_t i = 3; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw parse_error("field: expected q or fp:<prime>");
            p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (p > (std::uint64_t(1) << 31)) throw parse_error("field: characteristic too large");
        }
        if (s.size() == 3) throw parse_error("field: expected q or fp:<prime>");
        if (!is_prime_number(p)) throw parse_error("field: characteristic must be prime");
        return FieldSpec{static_cast<std::uint32_t>(p)};
    }
    throw parse_error("field: expected q or fp:<prime>");
}

inline std::string field_name(FieldSpec f) {
    return f.p == 0 ? std::string("q") : "fp:" + std::to_string(f.p);
}

namespace detail {

using RowQ = std::vector<std::pair<int, Int>>;        // sorted by column
using RowP = std::vector<std::pair<int, std::int64_t>>;

// Exact rank over the rationals by integer row elimination. Pivots prefer unit
// entries in short rows; general steps use the gcd-scaled combination
// (pv/g) row - (a/g) pivot_row followed by content normalization, so every
// intermediate stays an integer.
inline long rank_rows_q(std::vector<RowQ> rows) {
    long rank = 0;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        std::size_t best = rows.size();
        std::size_t best_sz = 0;
        bool best_unit = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            bool unit = false;
            for (const auto& [c, v] : rows[r])
                if (v == 1 || v == -1) { unit = true; break; }
            if (best == rows.size() || (unit && !best_unit) ||
                (unit == best_unit && rows[r].size() < best_sz)) {
                best = r;
                best_sz = rows[r].size();
                best_unit = unit;
            }
        }
        if (best == rows.size()) break;
        ++rank;
        done[best] = 1;
        const RowQ& prow = rows[best];
        int pcol = -1;
        Int pval;
        for (const auto& [c, v] : prow)
            if (pcol < 0 || ((v == 1 || v == -1) && !(pval == 1 || pval == -1))) { pcol = c; pval = v; }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            Int a;
            bool hit = false;
            for (const auto& [c, v] : rows[r])
                if (c == pcol) { a = v; hit = true; break; }
            if (!hit) continue;
            Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(pval));
            Int mr = pval / g, mp = a / g;
            RowQ merged;
            merged.reserve(rows[r].size() + prow.size());
            std::size_t i = 0, j = 0;
            Int content = 0;
            while (i < rows[r].size() || j < prow.size()) {
                int ci = i < rows[r].size() ? rows[r][i].first : INT32_MAX;
                int cj = j < prow.size() ? prow[j].first : INT32_MAX;
                int c = std::min(ci, cj);
                Int v = 0;
                if (ci == c) v += mr * rows[r][i++].second;
                if (cj == c) v -= mp * prow[j++].second;
                if (v != 0) {
                    merged.emplace_back(c, v);
                    Int av = boost::multiprecision::abs(v);
                    content = content == 0 ? av : Int(boost::multiprecision::gcd(content, av));
                }
            }
            if (content > 1)
                for (auto& [c, v] : merged) v /= content;
            rows[r] = std::move(merged);
        }
    }
    return rank;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

inline long rank_rows_p(std::vector<RowP> rows, std::uint32_t p) {
    const std::int64_t m = p;
    long rank = 0;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!done[r] && !rows[r].empty() && (best == rows.size() || rows[r].size() < rows[best].size()))
                best = r;
        if (best == rows.size()) break;
        ++rank;
        done[best] = 1;
        const RowP prow = rows[best];
        const int pcol = prow.front().first;
        const std::int64_t pinv = inv_mod(prow.front().second, m);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            std::int64_t a = 0;
            for (const auto& [c, v] : rows[r])
                if (c == pcol) { a = v; break; }
            if (a == 0) continue;
            const std::int64_t f = (a * pinv) % m;
            RowP merged;
            merged.reserve(rows[r].size() + prow.size());
            std::size_t i = 0, j = 0;
            while (i < rows[r].size() || j < prow.size()) {
                int ci = i < rows[r].size() ? rows[r][i].first : INT32_MAX;
                int cj = j < prow.size() ? prow[j].first : INT32_MAX;
                int c = std::min(ci, cj);
                std::int64_t v = 0;
                if (ci == c) v += rows[r][i++].second;
                if (cj == c) v -= f * prow[j++].second % m;
                v %= m;
                if (v < 0) v += m;
                if (v != 0) merged.emplace_back(c, v);
            }
            rows[r] = std::move(merged);
        }
    }
    return rank;
}

}  // namespace detail

/// Dimensions of the reduced simplicial cohomology of a subset-closed face list,
/// over Q or F_p. Entry [k] is dim of degree k-1, starting at the empty face; over a
/// field these coincide with the reduced homology dimensions. Void complex -> {}.
inline std::vector<long> reduced_cohomology_dims(const std::vector<std::uint64_t>& face_list, FieldSpec field) {
    if (face_list.empty()) return {};
    int maxdim = -1;
    for (std::uint64_t f : face_list) maxdim = std::max(maxdim, std::popcount(f) - 1);
    std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(maxdim + 2));
    for (std::uint64_t f : face_list) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    bool has_empty = !by_dim[0].empty();
    if (!has_empty) throw internal_error("cohomology: face list misses the empty face");
    std::unordered_map<std::uint64_t, int> index;
    std::vector<long> counts(static_cast<std::size_t>(maxdim + 2), 0);
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        std::sort(by_dim[d].begin(), by_dim[d].end());
        by_dim[d].erase(std::unique(by_dim[d].begin(), by_dim[d].end()), by_dim[d].end());
        counts[d] = static_cast<long>(by_dim[d].size());
    }
    // ranks[d] = rank of the boundary map from d-faces to (d-1)-faces, d >= 0.
    std::vector<long> ranks(static_cast<std::size_t>(maxdim + 2), 0);
    for (int d = 0; d <= maxdim; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d)];
        const auto& upper = by_dim[static_cast<std::size_t>(d + 1)];
        if (upper.empty()) continue;
        index.clear();
        for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
        if (field.p == 0) {
            std::vector<detail::RowQ> rows;
            rows.reserve(upper.size());
            for (std::uint64_t f : upper) {
                detail::RowQ row;
                int sign = 1;
                for (std::uint64_t m = f; m; m &= m - 1) {
                    std::uint64_t sub = f & ~(m & ~(m - 1));
                    auto it = index.find(sub);
                    if (it == index.end()) throw internal_error("cohomology: face list not subset closed");
                    row.emplace_back(it->second, Int(sign));
                    sign = -sign;
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
            ranks[static_cast<std::size_t>(d + 1)] = detail::rank_rows_q(std::move(rows));
        } else {
            std::vector<detail::RowP> rows;
            rows.reserve(upper.size());
            for (std::uint64_t f : upper) {
                detail::RowP row;
                std::int64_t sign = 1;
                for (std::uint64_t m = f; m; m &= m - 1) {
                    std::uint64_t sub = f & ~(m & ~(m - 1));
                    auto it = index.find(sub);
                    if (it == index.end()) throw internal_error("cohomology: face list not subset closed");
                    row.emplace_back(it->second, sign == 1 ? 1 : field.p - 1);
                    sign = -sign;
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
            ranks[static_cast<std::size_t>(d + 1)] = detail::rank_rows_p(std::move(rows), field.p);
        }
    }
    std::vector<long> dims(static_cast<std::size_t>(maxdim + 2), 0);
    for (int d = -1; d <= maxdim; ++d) {
        long up = d + 1 <= maxdim ? ranks[static_cast<std::size_t>(d + 2)] : 0;
        dims[static_cast<std::size_t>(d + 1)] =
            counts[static_cast<std::size_t>(d + 1)] - ranks[static_cast<std::size_t>(d + 1)] - up;
        if (dims[static_cast<std::size_t>(d + 1)] < 0)
            throw internal_error("cohomology: negative dimension");
    }
    long chi_faces = euler_characteristic_reduced(face_list);
    long chi_dims = 0;
    for (int d = -1; d <= maxdim; ++d) {
        long h = dims[static_cast<std::size_t>(d + 1)];
        chi_dims += ((d + 2) % 2 == 0) ? h : -h;
    }
    if (chi_dims != chi_faces) throw internal_error("cohomology: Euler characteristic mismatch");
    return dims;
}

}  // namespace edgecoh
