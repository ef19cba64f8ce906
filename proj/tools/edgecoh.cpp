#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgecoh/census.hpp"
#include "edgecoh/report.hpp"

namespace {

using namespace edgecoh;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> input_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

json verify_json(const Graph& g, const VerifyResult& v) {
    json j;
    j["graph"] = encode_graph6(g);
    j["field"] = field_name(v.field);
    j["truncation"] = v.trunc;
    j["checked_degrees"] = v.checked_r;
    j["status"] = v.pass ? "pass" : "fail";
    if (v.has_mismatch)
        j["first_mismatch"] = {{"r", v.mismatch.r},
                               {"degree", v.mismatch.degree},
                               {"engine", v.mismatch.engine},
                               {"oracle", v.mismatch.oracle}};
    return j;
}

int cmd_analyze(const std::string& input, const std::string& format, FieldSpec field, bool zn,
                bool do_verify, int trunc) {
    Graph g = parse_graph(read_input(input));
    AnalysisReport rep = analyze(g, field);
    if (zn) add_zn(rep, trunc);
    if (do_verify) add_verify(rep, trunc);
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << to_table(rep);
    return do_verify && !rep.verify.pass ? 1 : 0;
}

int cmd_verify(const std::string& input, const std::string& format, FieldSpec field, int trunc) {
    Graph g = parse_graph(read_input(input));
    VerifyResult v = verify_against_oracle(g, field, trunc);
    if (format == "json") {
        std::cout << verify_json(g, v).dump(2) << "\n";
    } else {
        std::cout << "verification (field " << field_name(field) << ", truncation " << v.trunc
                  << "): " << (v.pass ? "PASS" : "FAIL") << "\n";
        if (v.has_mismatch) {
            std::cout << "first mismatch at r = " << v.mismatch.r << ", degree (";
            for (std::size_t i = 0; i < v.mismatch.degree.size(); ++i)
                std::cout << (i ? "," : "") << v.mismatch.degree[i];
            std::cout << "): engine " << v.mismatch.engine << ", oracle " << v.mismatch.oracle
                      << "\n";
        }
    }
    return v.pass ? 0 : 1;
}

int cmd_poset(const std::string& input, const std::string& format) {
    Graph g = parse_graph(read_input(input));
    PosetQ ps = build_Q(g);
    if (format == "json") {
        json j;
        j["n"] = ps.n;
        json nodes = json::array();
        for (std::size_t i = 0; i < ps.elems.size(); ++i)
            nodes.push_back({{"index", static_cast<int>(i)},
                             {"prime", display(ps.elems[i])},
                             {"dim", krull_dim(ps.elems[i])}});
        j["nodes"] = nodes;
        json cov = json::array();
        for (auto [a, b] : covers(ps)) cov.push_back(json::array({a, b}));
        j["covers"] = cov;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << hasse_dot(ps);
    }
    return 0;
}

int cmd_gin(const std::string& input, const std::string& format) {
    Graph g = parse_graph(read_input(input));
    std::vector<Monomial> gens = gin_ideal(g);
    GinDiscrepancy disc = gin_discrepancy(g);
    if (format == "json") {
        json j;
        j["generators"] = json::array();
        for (const Monomial& m : gens) j["generators"].push_back(display(m));
        j["path_generators"] = json::array();
        for (const Monomial& m : gin_path_generators(g)) j["path_generators"].push_back(display(m));
        j["discrepancy"] = {{"only_in_gin", json::array()}, {"only_in_paths", json::array()}};
        for (const Monomial& m : disc.only_in_gin) j["discrepancy"]["only_in_gin"].push_back(display(m));
        for (const Monomial& m : disc.only_in_paths) j["discrepancy"]["only_in_paths"].push_back(display(m));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gin generators (" << gens.size() << "):\n";
        for (const Monomial& m : gens) std::cout << "  " << display(m) << "\n";
        if (!disc.empty()) {
            std::cout << "path-formula discrepancy:\n";
            for (const Monomial& m : disc.only_in_gin)
                std::cout << "  only in gin: " << display(m) << "\n";
            for (const Monomial& m : disc.only_in_paths)
                std::cout << "  only in path formula: " << display(m) << "\n";
        }
    }
    return 0;
}

int cmd_census(const std::string& input, const std::string& cache_path, FieldSpec field,
               int trunc) {
    std::vector<std::string> lines = input_lines(read_input(input));
    std::vector<json> records = load_census_cache(cache_path);
    CensusSummary sum = run_census(lines, field, trunc, records);
    save_census_cache(cache_path, records);
    for (const json& rec : records) std::cout << rec.dump() << "\n";
    std::cerr << "census: " << sum.computed << " computed, " << sum.reused << " reused\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local cohomology of binomial edge ideals"};
    app.require_subcommand(1);

    std::string cache_path;
    bool zn = false, do_verify = false;

    CLI::App* a_analyze = app.add_subcommand("analyze", "full local cohomology report");
    CLI::App* a_verify = app.add_subcommand("verify", "compare against the classical oracle on gin");
    CLI::App* a_poset = app.add_subcommand("poset", "Hasse diagram of the prime poset Q");
    CLI::App* a_gin = app.add_subcommand("gin", "generators of the generic initial ideal");
    CLI::App* a_census = app.add_subcommand("census", "batch summary over a graph6 stream");

    std::string fmt_analyze = "table", fmt_verify = "table", fmt_poset = "dot", fmt_gin = "table";
    int trunc_analyze = 12, trunc_verify = 12, trunc_census = 4;
    std::string in_analyze = "-", in_verify = "-", in_poset = "-", in_gin = "-", in_census = "-";
    std::string field_analyze = "q", field_verify = "q", field_census = "q";

    a_analyze->add_option("input", in_analyze, "graph file (edge list or graph6), - for stdin");
    a_analyze->add_option("--format", fmt_analyze, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    a_analyze->add_option("--field", field_analyze, "coefficient field: q or fp:<prime>");
    a_analyze->add_option("--truncate", trunc_analyze, "truncation for --zn and --verify");
    a_analyze->add_flag("--zn", zn, "include the truncated multigraded expansion");
    a_analyze->add_flag("--verify", do_verify, "cross-check against the classical oracle");

    a_verify->add_option("input", in_verify, "graph file (edge list or graph6), - for stdin");
    a_verify->add_option("--format", fmt_verify, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    a_verify->add_option("--field", field_verify, "coefficient field: q or fp:<prime>");
    a_verify->add_option("--truncate", trunc_verify, "degree box truncation");

    a_poset->add_option("input", in_poset, "graph file (edge list or graph6), - for stdin");
    a_poset->add_option("--format", fmt_poset, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    a_gin->add_option("input", in_gin, "graph file (edge list or graph6), - for stdin");
    a_gin->add_option("--format", fmt_gin, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    a_census->add_option("input", in_census, "graph6 lines, - for stdin");
    a_census->add_option("--cache", cache_path, "JSON-lines cache file")->required();
    a_census->add_option("--field", field_census, "coefficient field: q or fp:<prime>");
    a_census->add_option("--truncate", trunc_census, "verification truncation per record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*a_analyze)
            return cmd_analyze(in_analyze, fmt_analyze, edgecoh::parse_field(field_analyze), zn,
                               do_verify, trunc_analyze);
        if (*a_verify)
            return cmd_verify(in_verify, fmt_verify, edgecoh::parse_field(field_verify), trunc_verify);
        if (*a_poset) return cmd_poset(in_poset, fmt_poset);
        if (*a_gin) return cmd_gin(in_gin, fmt_gin);
        if (*a_census)
            return cmd_census(in_census, cache_path, edgecoh::parse_field(field_census), trunc_census);
    } catch (const edgecoh::cache_corruption& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const edgecoh::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
