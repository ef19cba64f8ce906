#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gin.hpp"
#include "hochster.hpp"
#include "poset.hpp"

namespace edgecoh {

using json = nlohmann::ordered_json;

/// One row of the multiplicity table.
struct MultRow {
    int r = 0;
    int q_index = 0;
    std::string q_display;
    int dq = 0;
    long mult = 0;
};

struct AnalysisReport {
    Graph g;
    FieldSpec field;
    CohomologyProfile profile;
    std::vector<MultRow> rows;
    std::map<int, std::string> series;  // r -> Z-graded Hilbert series
    bool serre_ok = false;
    int depth = 0, dim = 0;
    bool cohen_macaulay = false, buchsbaum = false;
    RegularityReport reg;
    bool char_dependent = false;  // Q profile differs from F_2 or F_3
    bool has_verify = false;
    VerifyResult verify;
    bool has_zn = false;
    int zn_trunc = 0;
    std::map<int, MultiSeries> zn;  // r -> truncated Z^n expansion
};

inline AnalysisReport analyze(const Graph& g, FieldSpec field) {
    AnalysisReport rep;
    rep.g = g;
    rep.field = field;
    rep.profile = compute_profile(g, field);
    for (const auto& [key, m] : rep.profile.mult) {
        const PrimeIdeal& q = rep.profile.Q.elems[static_cast<std::size_t>(key.second)];
        rep.rows.push_back({key.first, key.second, display(q), krull_dim(q), m});
    }
    for (int r : cohomological_degrees(rep.profile))
        rep.series[r] = to_string(hilbert_series_z(rep.profile, r));
    rep.serre_ok = serre_alternating_sum(rep.profile) ==
                   sr_ring_hilbert_series_u(sr_complex_of_gin(g));
    rep.depth = rep.profile.depth;
    rep.dim = rep.profile.dim;
    rep.cohen_macaulay = rep.profile.cohen_macaulay;
    rep.buchsbaum = rep.profile.buchsbaum;
    rep.reg = regularity(rep.profile);
    // The multiplicities can depend on char K; flag a difference, never fail.
    if (field.p == 0) {
        for (std::uint32_t p : {2u, 3u})
            if (compute_profile(g, FieldSpec{p}).mult != rep.profile.mult) rep.char_dependent = true;
    } else {
        rep.char_dependent = compute_profile(g, FieldSpec{0}).mult != rep.profile.mult;
    }
    return rep;
}

inline void add_verify(AnalysisReport& rep, int trunc) {
    rep.has_verify = true;
    rep.verify = verify_against_oracle(rep.g, rep.field, trunc);
}

inline void add_zn(AnalysisReport& rep, int trunc) {
    check_multi_limits(rep.g.n, trunc);
    rep.has_zn = true;
    rep.zn_trunc = trunc;
    for (int r : cohomological_degrees(rep.profile)) rep.zn[r] = hilbert_series_zn(rep.profile, r, trunc);
}

inline json multi_to_json(const MultiSeries& ms) {
    json terms = json::array();
    for (const auto& [key, c] : ms.coeff) {
        json t;
        t["degree"] = json::array();
        for (int e : unpack_exponents(key, ms.n)) t["degree"].push_back(-e);
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return terms;
}

inline json to_json(const AnalysisReport& rep) {
    json j;
    j["n"] = rep.g.n;
    json edges = json::array();
    for (auto [u, v] : rep.g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    j["field"] = field_name(rep.field);
    j["depth"] = rep.depth;
    j["dimension"] = rep.dim;
    j["cohen_macaulay"] = rep.cohen_macaulay;
    j["buchsbaum"] = rep.buchsbaum;
    j["regularity"] = {{"series_based", rep.reg.series_based},
                       {"corrected_closed_form", rep.reg.corrected_closed_form},
                       {"paper_literal", rep.reg.paper_literal},
                       {"agree", rep.reg.agree}};
    j["char_dependent"] = rep.char_dependent;
    j["serre_identity"] = rep.serre_ok;
    j["poset_q_size"] = static_cast<int>(rep.profile.Q.elems.size());
    json mult = json::array();
    for (const MultRow& row : rep.rows)
        mult.push_back({{"r", row.r},
                        {"q", row.q_display},
                        {"q_index", row.q_index},
                        {"dim_q", row.dq},
                        {"multiplicity", row.mult}});
    j["multiplicities"] = mult;
    json series;
    for (const auto& [r, s] : rep.series) series["H^" + std::to_string(r)] = s;
    j["hilbert_series"] = series;
    if (rep.has_zn) {
        json zn;
        zn["truncation"] = rep.zn_trunc;
        for (const auto& [r, ms] : rep.zn) zn["H^" + std::to_string(r)] = multi_to_json(ms);
        j["multigraded"] = zn;
    }
    if (rep.has_verify) {
        json v;
        v["pass"] = rep.verify.pass;
        v["truncation"] = rep.verify.trunc;
        v["degrees_checked"] = rep.verify.checked_r;
        if (rep.verify.has_mismatch) {
            v["mismatch"] = {{"r", rep.verify.mismatch.r},
                             {"degree", rep.verify.mismatch.degree},
                             {"engine", rep.verify.mismatch.engine},
                             {"oracle", rep.verify.mismatch.oracle}};
        }
        j["verification"] = v;
    }
    return j;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace detail

inline std::string to_table(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph: n = " << rep.g.n << ", " << rep.g.edges.size() << " edges\n";
    out << "field: " << field_name(rep.field) << "\n";
    out << "depth " << rep.depth << ", dimension " << rep.dim;
    if (rep.cohen_macaulay)
        out << ", Cohen-Macaulay";
    else if (rep.buchsbaum)
        out << ", Buchsbaum (not Cohen-Macaulay)";
    else
        out << ", neither Cohen-Macaulay nor Buchsbaum";
    out << "\n";
    out << "regularity: " << rep.reg.series_based << " (series), " << rep.reg.corrected_closed_form
        << " (closed form), " << rep.reg.paper_literal << " (literal closed form)"
        << (rep.reg.agree ? "" : "  [disagreement]") << "\n";
    out << "Serre identity: " << (rep.serre_ok ? "holds" : "FAILS") << "\n";
    if (rep.char_dependent) out << "note: multiplicities depend on the field characteristic\n";
    out << "\nlocal cohomology multiplicities (" << rep.rows.size() << " nonzero):\n";
    std::size_t wq = 1;
    for (const MultRow& row : rep.rows) wq = std::max(wq, row.q_display.size());
    out << "  " << detail::pad("r", 4) << detail::pad("mult", 6) << detail::pad("dim", 5)
        << "prime\n";
    for (const MultRow& row : rep.rows)
        out << "  " << detail::pad(std::to_string(row.r), 4)
            << detail::pad(std::to_string(row.mult), 6) << detail::pad(std::to_string(row.dq), 5)
            << row.q_display << "\n";
    out << "\ngraded Hilbert series (u = t^-1):\n";
    for (const auto& [r, s] : rep.series) out << "  H^" << r << ": " << s << "\n";
    if (rep.has_zn) {
        out << "\nmultigraded expansion, degrees down to -" << rep.zn_trunc << ":\n";
        for (const auto& [r, ms] : rep.zn) {
            out << "  H^" << r << ": " << ms.coeff.size() << " nonzero degrees";
            // Show the first few as a sanity anchor.
            int shown = 0;
            for (const auto& [key, c] : ms.coeff) {
                if (shown++ == 4) break;
                out << (shown == 1 ? "  [" : ", ") << "(";
                std::vector<int> es = unpack_exponents(key, ms.n);
                for (std::size_t i = 0; i < es.size(); ++i)
                    out << (i ? "," : "") << -es[i];
                out << "): " << c.str();
            }
            if (shown > 0) out << (shown > 4 ? ", ...]" : "]");
            out << "\n";
        }
    }
    if (rep.has_verify) {
        out << "\nverification against the classical oracle (truncation "
            << rep.verify.trunc << "): " << (rep.verify.pass ? "PASS" : "FAIL") << "\n";
        if (rep.verify.has_mismatch) {
            out << "  first mismatch at r = " << rep.verify.mismatch.r << ", degree (";
            for (std::size_t i = 0; i < rep.verify.mismatch.degree.size(); ++i)
                out << (i ? "," : "") << rep.verify.mismatch.degree[i];
            out << "): engine " << rep.verify.mismatch.engine << ", oracle "
                << rep.verify.mismatch.oracle << "\n";
        }
    }
    return out.str();
}

}  // namespace edgecoh
