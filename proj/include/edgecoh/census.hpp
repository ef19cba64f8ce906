#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "report.hpp"

namespace edgecoh {

/// Raised when a census cache fails to parse or a record checksum is wrong.
class cache_corruption : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
    return out;
}

}  // namespace detail

/// Checksum over the record dump with the trailing "checksum" field removed.
inline std::string record_checksum(const json& rec) {
    json copy = rec;
    copy.erase("checksum");
    return detail::fnv1a64_hex(copy.dump());
}

/// One census record. The graph key is the raw graph6 string as given.
inline json census_record(const std::string& raw_key, const Graph& g, FieldSpec field,
                          int verify_trunc) {
    AnalysisReport rep = analyze(g, field);
    add_verify(rep, verify_trunc);
    json rec;
    rec["graph6"] = raw_key;
    rec["field"] = field_name(field);
    rec["n"] = g.n;
    rec["edges"] = static_cast<int>(g.edges.size());
    rec["depth"] = rep.depth;
    rec["dimension"] = rep.dim;
    rec["cohen_macaulay"] = rep.cohen_macaulay;
    rec["buchsbaum"] = rep.buchsbaum;
    rec["regularity"] = rep.reg.series_based;
    rec["q_count"] = static_cast<int>(rep.profile.Q.elems.size());
    rec["verify_truncation"] = verify_trunc;
    rec["verify_pass"] = rep.verify.pass;
    rec["checksum"] = record_checksum(rec);
    return rec;
}

/// Cache file: JSON lines, one record each, trailing checksum field. A missing
/// file is an empty cache; anything unparsable or checksum-broken refuses.
inline std::vector<json> load_census_cache(const std::string& path) {
    std::vector<json> records;
    std::ifstream in(path);
    if (!in) return records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw cache_corruption("census cache line " + std::to_string(lineno) +
                                   " is not valid JSON: " + path);
        }
        if (!rec.is_object() || !rec.contains("checksum") || !rec.contains("graph6") ||
            !rec.contains("field") || !rec["checksum"].is_string() ||
            rec["checksum"].get<std::string>() != record_checksum(rec))
            throw cache_corruption("census cache line " + std::to_string(lineno) +
                                   " failed its checksum: " + path);
        records.push_back(std::move(rec));
    }
    return records;
}

inline void save_census_cache(const std::string& path, const std::vector<json>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write census cache: " + path);
    for (const json& rec : records) out << rec.dump() << "\n";
}

struct CensusSummary {
    int computed = 0;
    int reused = 0;
};

/// Runs the census over raw graph6 lines against the loaded cache. Keys already
/// present (same raw string and field) are reused, so reruns are idempotent.
inline CensusSummary run_census(const std::vector<std::string>& lines, FieldSpec field,
                                int verify_trunc, std::vector<json>& records) {
    std::map<std::pair<std::string, std::string>, bool> seen;
    for (const json& rec : records)
        seen[{rec["graph6"].get<std::string>(), rec["field"].get<std::string>()}] = true;
    CensusSummary sum;
    for (std::string line : lines) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        if (seen.count({line, field_name(field)})) {
            sum.reused++;
            continue;
        }
        records.push_back(census_record(line, parse_graph6(line), field, verify_trunc));
        seen[{line, field_name(field)}] = true;
        sum.computed++;
    }
    return sum;
}

}  // namespace edgecoh
