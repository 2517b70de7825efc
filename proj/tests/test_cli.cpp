#include "doctest.h"

#include "cli.hpp"
#include "gspec/graph_io.hpp"
#include "gspec/spectra.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gspec;
using nlohmann::json;

namespace {

const std::string kKarate = std::string(GSPEC_DATA_DIR) + "/karate.net";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("gspec_test_" + name)).string();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("table number formatting") {
    CHECK(cli::table_number(0.5) == "0.5");
    CHECK(cli::table_number(1.0) == "1");
    CHECK(cli::table_number(2.0 / 9.0) == "0.22");
    CHECK(cli::table_number(1.0 / 3.0) == "0.33");
    CHECK(cli::table_number(0.0) == "0");
    CHECK(cli::table_cell(eigenvalue_bound_set(4, 5)) == "(0.5, 0.22, 0.33)");
    CHECK(cli::table_cell(eigenvalue_bound_set(0, 3)) == "(1.5, ·, ·)");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"nonsense"}).code == cli::kExitUsage);
    CHECK(run({"spectra", kKarate}).code == cli::kExitUsage);
    CHECK(run({"spectra", kKarate, "--kind", "A", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"bounds", kKarate, "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"sweep", "--graphc", "9..3"}).code == cli::kExitUsage);
    CHECK(run({"region"}).code == cli::kExitUsage);
    CHECK(run({"gen", "star"}).code == cli::kExitUsage);
    const Result help = run({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("plotdata") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
    const Result missing = run({"info", "/nonexistent/graph.txt"});
    CHECK(missing.code == cli::kExitDomainError);
    CHECK(missing.err.rfind("error: ", 0) == 0);

    const std::string path = temp_path("isolated.txt");
    std::ofstream(path) << "nodes 3\n0 1\n";
    const Result lrw = run({"spectra", path, "--kind", "Lrw"});
    CHECK(lrw.code == cli::kExitDomainError);
    CHECK(lrw.err.find("error:") != std::string::npos);
    CHECK(run({"cluster", path, "--kind", "A", "--k", "5"}).code == cli::kExitDomainError);
    std::remove(path.c_str());
}

TEST_CASE("info") {
    const Result r = run({"info", kKarate});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 34);
    CHECK(j["edges"] == 78);
    CHECK(j["d_min"] == 1.0);
    CHECK(j["d_max"] == 17.0);
    CHECK(j["components"] == 1);
    CHECK(j["class"]["k"] == 17);
    CHECK(j["region"]["label"] == "normal");
}

TEST_CASE("bounds and gaps on karate") {
    const json b = json::parse(run({"bounds", kKarate}).out);
    CHECK(b["rendered"] == "(8.00, 1.78, 2.67)");
    CHECK(b["bounds"]["e_prime_ALrw"] == 2.0);
    for (const char* pair : {"A_L", "L_Lrw", "A_Lrw"}) CHECK(b["pairs"][pair]["verified"] == true);

    const json g = json::parse(run({"gaps", kKarate}).out);
    CHECK(g["bounds"]["g_AL"].get<double>() == doctest::Approx(16.0 / 34.0));
    CHECK(g["pairs"]["L_Lrw"]["verified"] == true);
    CHECK(g["pairs"]["A_Lrw"].contains("max_primed_difference"));
    CHECK(run({"bounds", kKarate, "--format", "text"}).out.find("(8.00, 1.78, 2.67)") != std::string::npos);
}

TEST_CASE("spectra CSV round-trips to 12 significant digits") {
    const Graph g = load_graph_file(kKarate);
    for (const char* kind : {"A", "L", "Lrw"}) {
        const Result r = run({"spectra", kKarate, "--kind", kind});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 35);
        CHECK(rows[0] == std::vector<std::string>{"index", "value"});
        const Spectrum s = spectrum(g, parse_representation_kind(kind));
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double parsed = std::stod(rows[i + 1][1]);
            CHECK(std::abs(parsed - s.values[i]) <= 1e-12 * std::max(1.0, std::abs(s.values[i])));
        }
    }
    const json j = json::parse(run({"spectra", kKarate, "--kind", "L", "--format", "json"}).out);
    CHECK(j["values"].size() == 34);
    CHECK(j["order"] == "ascending");
}

TEST_CASE("gen writes loadable graphs") {
    const std::string path = temp_path("graphc.txt");
    REQUIRE(run({"gen", "graphc", "5", "-o", path}).code == 0);
    const Graph g = load_graph_file(path);
    CHECK(g.size() == 23);
    CHECK(g.index_base() == 1);
    CHECK(g.weights() == gen_graph_c(5).weights());
    std::remove(path.c_str());

    const Result star = run({"gen", "star", "4"});
    CHECK(star.out == "nodes 4 base 1\n1 2\n1 3\n1 4\n");
    CHECK(run({"gen", "bipartiteb"}).out.rfind("nodes 34 base 1\n", 0) == 0);
}

TEST_CASE("input format override") {
    const std::string path = temp_path("triangle.dat");
    std::ofstream(path) << "*Vertices 3\n*Edges\n1 2\n2 3\n1 3\n";
    CHECK(run({"info", path}).code == cli::kExitDomainError);
    const Result r = run({"info", path, "--input-format", "pajek"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["edges"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("table") {
    const Result text = run({"table"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("(0.5, 0.22, 0.33)") != std::string::npos);
    CHECK(text.out.find("(2.5, 1.43, 2.14)") != std::string::npos);

    const auto rows = csv_rows(run({"table", "--format", "csv"}).out);
    REQUIRE(rows.size() == 33);
    CHECK(rows[0].back() == "region");
    // Cell values equal the closed forms before rounding.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double j = std::stod(rows[i][0]), k = std::stod(rows[i][1]);
        CHECK(std::stod(rows[i][2]) == (k - j) / 2.0);
        if (j > 0) CHECK(std::stod(rows[i][3]) == 2.0 * (k - j) / (k + j));
    }
}

TEST_CASE("region") {
    const json a = json::parse(run({"region", "--dmin", "2", "--dmax", "4"}).out);
    CHECK(a["region"] == "italic");
    const json b = json::parse(run({"region", kKarate}).out);
    CHECK(b["region"] == "normal");
    CHECK(run({"region", "--dmin", "5", "--dmax", "4"}).code == cli::kExitDomainError);
}

TEST_CASE("cluster with ground truth") {
    const Result r = run({"cluster", kKarate, "--kind", "Lrw", "--k", "2", "--truth",
                          std::string(GSPEC_DATA_DIR) + "/karate_factions.txt"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["comparison"]["misplaced"] == 1);
    CHECK(j["comparison"]["misplaced_ids"] == json::array({3}));
    CHECK(j["labels"].size() == 34);
    CHECK(j["clusters"].size() == 2);
}

TEST_CASE("crossover, polymap and weyl") {
    const std::string path = temp_path("c10.txt");
    run({"gen", "graphc", "10", "-o", path});
    const json c = json::parse(run({"crossover", path, "--pair", "A_L"}).out);
    CHECK(c["indices"] == json::array({1, 19}));
    CHECK(c["bound"] == 4.0);

    const json p = json::parse(run({"polymap", kKarate, "--pair", "A_L"}).out);
    CHECK(p["unstable"] == true);
    CHECK(p["coefficients"].is_null());
    // C(10) is irregular: mu = 1 meets lambda = 0 while mu = -1 meets both 2 and 10.
    CHECK(json::parse(run({"polymap", path, "--pair", "AL"}).out)["unstable"] == true);
    const std::string regular = temp_path("k5.txt");
    run({"gen", "complete", "5", "-o", regular});
    const json stable = json::parse(run({"polymap", regular, "--pair", "AL", "--merge-tol", "1e-9"}).out);
    CHECK(stable["unstable"] == false);
    CHECK(stable["max_residual"].get<double>() < 1e-9);
    std::remove(regular.c_str());

    const json w = json::parse(run({"weyl", path}).out);
    CHECK(w["holds"] == true);
    std::remove(path.c_str());
}

TEST_CASE("plot data intervals are centred") {
    for (const char* figure : {"eigs", "gaps"}) {
        for (const char* pair : {"A_L", "L_Lrw", "A_Lrw"}) {
            const Result r = run({"plotdata", kKarate, "--figure", figure, "--pair", pair});
            REQUIRE(r.code == 0);
            CHECK(r.out.find("# pair=") != std::string::npos);
            const std::string bound_line = r.out.substr(r.out.find("# bound=") + 8);
            const double bound = std::stod(bound_line);
            const auto rows = csv_rows(r.out);
            REQUIRE(rows.size() >= 2);
            CHECK(rows[0][0] == "index");
            // Inner intervals: primed gap bounds for both L_rw pairs, e' only for A_Lrw eigenvalues.
            const bool primed = std::string(figure) == "gaps" ? std::string(pair) != "A_L" : std::string(pair) == "A_Lrw";
            CHECK((rows[0].size() == 10) == primed);
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const double transformed = std::stod(rows[i][2]), target = std::stod(rows[i][3]);
                const double center = std::stod(rows[i][5]);
                const double lo = std::stod(rows[i][6]), hi = std::stod(rows[i][7]);
                CHECK(center == doctest::Approx((transformed + target) / 2.0));
                CHECK(hi - lo == doctest::Approx(2.0 * bound));
            }
        }
    }
}

TEST_CASE("sweep") {
    const auto rows = csv_rows(run({"sweep", "--graphc", "3..5"}).out);
    CHECK(rows[0] == std::vector<std::string>{"k", "kind", "index", "normalized_gap", "rank", "at_k_plus_9"});
    // Per k: (k + 17) gaps for each of three kinds.
    CHECK(rows.size() == 1 + 3 * (20 + 21 + 22));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][5] == "1") CHECK(std::stoi(rows[i][2]) == std::stoi(rows[i][0]) + 9);
    }
}
