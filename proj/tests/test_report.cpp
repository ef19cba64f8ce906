#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "edgecoh/census.hpp"
#include "edgecoh/report.hpp"

using namespace edgecoh;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph k35() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i)
        for (int j = 6; j <= 8; ++j) e.emplace_back(i, j);
    return make_graph(8, e);
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("analysis of a single edge", "[report]") {
    AnalysisReport rep = analyze(make_graph(2, {{1, 2}}), parse_field("q"));
    CHECK(rep.depth == 3);
    CHECK(rep.dim == 3);
    CHECK(rep.cohen_macaulay);
    CHECK(rep.buchsbaum);
    CHECK(rep.serre_ok);
    CHECK_FALSE(rep.char_dependent);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].r == 3);
    CHECK(rep.rows[0].q_display == "J({1,2})");
    CHECK(rep.rows[0].dq == 3);
    CHECK(rep.rows[0].mult == 1);
    CHECK(rep.series.at(3) == "(t^-2 + t^-3)/(1 - t^-1)^3");
    CHECK(rep.reg.series_based == 1);
}

TEST_CASE("json report round trips and carries the verdict fields", "[report]") {
    AnalysisReport rep = analyze(k35(), parse_field("q"));
    json j = to_json(rep);

    CHECK(json::parse(j.dump()) == j);
    CHECK(j["n"] == 8);
    CHECK(j["edges"].size() == 15);
    CHECK(j["field"] == "q");
    CHECK(j["depth"] == 5);
    CHECK(j["dimension"] == 10);
    CHECK(j["cohen_macaulay"] == false);
    CHECK(j["buchsbaum"] == false);
    CHECK(j["regularity"]["series_based"] == 2);
    CHECK(j["regularity"]["corrected_closed_form"] == 2);
    CHECK(j["regularity"]["paper_literal"] == 1);
    CHECK(j["regularity"]["agree"] == false);
    CHECK(j["serre_identity"] == true);
    CHECK(j["poset_q_size"] == 6);
    CHECK(j["multiplicities"].size() == 5);
    CHECK(j["hilbert_series"]["H^10"] == "t^-10/(1 - t^-1)^10");
    CHECK_FALSE(j.contains("verification"));
    CHECK_FALSE(j.contains("multigraded"));
}

TEST_CASE("table report states the verdict in words", "[report]") {
    std::string cm = to_table(analyze(path(5), parse_field("q")));
    CHECK(cm.find("Cohen-Macaulay") != std::string::npos);
    CHECK(cm.find("depth 6, dimension 6") != std::string::npos);

    std::string bad = to_table(analyze(k35(), parse_field("q")));
    CHECK(bad.find("neither Cohen-Macaulay nor Buchsbaum") != std::string::npos);
    CHECK(bad.find("depth 5, dimension 10") != std::string::npos);
}

TEST_CASE("verification block is attached on request", "[report]") {
    AnalysisReport rep = analyze(path(4), parse_field("q"));
    add_verify(rep, 3);
    CHECK(rep.has_verify);
    CHECK(rep.verify.pass);
    json j = to_json(rep);
    REQUIRE(j.contains("verification"));
    CHECK(j["verification"]["pass"] == true);
    CHECK(j["verification"]["truncation"] == 3);
    CHECK_FALSE(j["verification"].contains("mismatch"));
}

TEST_CASE("multigraded block matches the closed form", "[report]") {
    AnalysisReport rep = analyze(make_graph(2, {{1, 2}}), parse_field("q"));
    add_zn(rep, 4);
    REQUIRE(rep.has_zn);
    REQUIRE(rep.zn.count(3) == 1);
    const MultiSeries& ms = rep.zn.at(3);
    // dim in degree (-k1,-k2) is k1 + k2 - 1 for k1,k2 >= 1, else 0.
    CHECK(multi_value(ms, {1, 1}) == 1);
    CHECK(multi_value(ms, {2, 3}) == 4);
    CHECK(multi_value(ms, {0, 2}) == 0);
    json j = to_json(rep);
    REQUIRE(j.contains("multigraded"));
    CHECK(j["multigraded"]["truncation"] == 4);
    CHECK(j["multigraded"]["H^3"].is_array());
    bool found = false;
    for (const auto& term : j["multigraded"]["H^3"])
        if (term["degree"] == json::array({-1, -1})) {
            found = true;
            CHECK(term["coeff"] == "1");
        }
    CHECK(found);
}

TEST_CASE("census records carry a checksum over their own content", "[report]") {
    json rec = census_record("A_", parse_graph6("A_"), parse_field("q"), 3);
    CHECK(rec["graph6"] == "A_");
    CHECK(rec["n"] == 2);
    CHECK(rec["depth"] == 3);
    CHECK(rec["dimension"] == 3);
    CHECK(rec["cohen_macaulay"] == true);
    CHECK(rec["verify_pass"] == true);
    CHECK(rec["checksum"] == record_checksum(rec));

    json tampered = rec;
    tampered["depth"] = 4;
    CHECK(tampered["checksum"] != record_checksum(tampered));
}

TEST_CASE("census cache round trips through disk", "[report]") {
    TempFile tmp("census_roundtrip.jsonl");
    std::vector<json> records;
    run_census({"A_", "Bw"}, parse_field("q"), 3, records);
    save_census_cache(tmp.path, records);
    std::vector<json> loaded = load_census_cache(tmp.path);
    REQUIRE(loaded.size() == records.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) CHECK(loaded[i] == records[i]);
}

TEST_CASE("missing cache is empty, corrupted cache refuses", "[report]") {
    CHECK(load_census_cache("does_not_exist.jsonl").empty());

    TempFile bad("census_bad.jsonl");
    {
        std::ofstream out(bad.path);
        out << "{not json\n";
    }
    CHECK_THROWS_AS(load_census_cache(bad.path), cache_corruption);

    TempFile forged(".census_forged.jsonl");
    {
        json rec = census_record("A_", parse_graph6("A_"), parse_field("q"), 3);
        rec["depth"] = 99;  // break the checksum
        std::ofstream out(forged.path);
        out << rec.dump() << "\n";
    }
    CHECK_THROWS_AS(load_census_cache(forged.path), cache_corruption);
}

TEST_CASE("census reruns reuse every cached record", "[report]") {
    std::vector<std::string> lines{"A_", "Bw", "C^", "A_"};
    std::vector<json> records;
    CensusSummary first = run_census(lines, parse_field("q"), 3, records);
    CHECK(first.computed == 3);  // the duplicate line is reused within the run
    CHECK(first.reused == 1);
    CHECK(records.size() == 3);

    CensusSummary second = run_census(lines, parse_field("q"), 3, records);
    CHECK(second.computed == 0);
    CHECK(second.reused == 4);
    CHECK(records.size() == 3);

    for (const json& rec : records) {
        CHECK(rec["cohen_macaulay"] ==
              (rec["depth"].get<int>() == rec["dimension"].get<int>()));
        CHECK(rec["verify_pass"] == true);
    }
}
