#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace edgecoh {

/// Simplicial complex on ground vertices 0..nverts-1 given by inclusion-maximal
/// facet masks. No facets at all is the void complex; a single empty facet is {∅}.
struct SimplicialComplex {
    int nverts = 0;
    std::vector<std::uint64_t> facets;
};

inline SimplicialComplex make_complex(int nverts, std::vector<std::uint64_t> facets) {
    if (nverts < 0 || nverts > 64) throw std::invalid_argument("complex: ground set out of range");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::uint64_t> keep;
    for (std::uint64_t f : facets) {
        bool maximal = true;
        for (std::uint64_t g : facets)
            if (f != g && (f & ~g) == 0) { maximal = false; break; }
        if (maximal) keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return SimplicialComplex{nverts, std::move(keep)};
}

inline bool is_face(const SimplicialComplex& c, std::uint64_t mask) {
    for (std::uint64_t f : c.facets)
        if ((mask & ~f) == 0) return true;
    return false;
}

/// All faces, empty face included, sorted by (dimension, mask). Void complex -> {}.
inline std::vector<std::uint64_t> faces(const SimplicialComplex& c) {
    std::vector<std::uint64_t> out;
    std::uint64_t ground = 0;
    for (std::uint64_t f : c.facets) ground |= f;
    if (std::popcount(ground) <= 22) {
        std::uint64_t sub = 0;
        do {
            if (is_face(c, sub)) out.push_back(sub);
            sub = (sub - ground) & ground;
        } while (sub != 0);
        if (!c.facets.empty() && out.empty()) out.push_back(0);  // {∅} has ground 0
    } else {
        // Large ground set: walk subsets facet by facet and deduplicate.
        std::vector<std::uint64_t> all;
        for (std::uint64_t f : c.facets) {
            std::uint64_t sub = 0;
            do {
                all.push_back(sub);
                sub = (sub - f) & f;
            } while (sub != 0);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        out = std::move(all);
    }
    if (!c.facets.empty() && std::find(out.begin(), out.end(), 0) == out.end())
        out.insert(out.begin(), 0);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

/// Link of a face: all residues g - f of faces g containing f. Void if f is not a face.
inline SimplicialComplex link(const SimplicialComplex& c, std::uint64_t f) {
    std::vector<std::uint64_t> lf;
    for (std::uint64_t fac : c.facets)
        if ((f & ~fac) == 0) lf.push_back(fac & ~f);
    return make_complex(c.nverts, std::move(lf));
}

/// Reduced Euler characteristic from a subset-closed face list (empty face counted
/// with dimension -1). The void complex gives 0.
inline long euler_characteristic_reduced(const std::vector<std::uint64_t>& face_list) {
    long chi = 0;
    for (std::uint64_t f : face_list) chi += (std::popcount(f) % 2 == 0) ? -1 : 1;
    return chi;
}

/// A vertex lying in every facet makes the complex a cone, hence acyclic.
inline bool has_cone_point(const SimplicialComplex& c) {
    if (c.facets.empty()) return false;
    std::uint64_t common = ~std::uint64_t(0);
    for (std::uint64_t f : c.facets) common &= f;
    return common != 0;
}

}  // namespace edgecoh
