#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "testutil.hpp"

#ifndef PERSHOM_CLI_PATH
#error "PERSHOM_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path temp_file(const std::string& stem) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("pershom_test_" + stem + "_" + std::to_string(counter++));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args) {
    const auto out_path = temp_file("out");
    const auto err_path = temp_file("err");
    const std::string cmd = std::string("\"") + PERSHOM_CLI_PATH + "\" " + args + " > \"" +
                            out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return res;
}

std::string write_temp(const std::string& stem, const std::string& content) {
    const auto p = temp_file(stem);
    std::ofstream out(p);
    out << content;
    return p.string();
}

std::string fixture(const std::string& name) { return ptest::fixture_path(name); }

// Projective plane, all faces listed explicitly (vertex names 0..5).
std::string projective_plane_text() {
    const std::vector<std::vector<int>> faces = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                                 {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                                 {2, 4, 5}, {3, 4, 5}};
    std::set<std::vector<int>> all;
    for (const auto& f : faces) {
        all.insert(f);
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<int> e;
            for (std::size_t j = 0; j < 3; ++j)
                if (j != k) e.push_back(f[j]);
            all.insert(e);
        }
        for (int v : f) all.insert({v});
    }
    std::string text;
    for (const auto& s : all) {
        for (std::size_t j = 0; j < s.size(); ++j)
            text += (j ? " " : "") + std::to_string(s[j]);
        text += "\n";
    }
    return text;
}

using Catch::Matchers::ContainsSubstring;

}  // namespace

TEST_CASE("barcode subcommand", "[cli]") {
    const std::string flt = fixture("square.flt");

    SECTION("text output") {
        auto res = run_cli("barcode --field q --input \"" + flt + "\" --format text");
        CHECK(res.exit_code == 0);
        CHECK(res.out ==
              "field: Q\n"
              "dim 0: [0, 1)\n"
              "dim 0: [0, inf)\n"
              "dim 0: [1, 2)\n"
              "dim 1: [2, 5)\n"
              "dim 1: [3, 4)\n");
        CHECK(res.err.empty());
    }

    SECTION("json output") {
        auto res = run_cli("barcode --field q --input \"" + flt + "\" --format json");
        REQUIRE(res.exit_code == 0);
        auto j = nlohmann::json::parse(res.out);
        CHECK(j["field"] == "Q");
        REQUIRE(j["bars"].size() == 5);
        CHECK(j["bars"][0]["dim"] == 0);
        CHECK(j["bars"][0]["birth"] == 0);
        CHECK(j["bars"][0]["death"] == 1);
        CHECK(j["bars"][0]["rep"] ==
              nlohmann::json::array({{"-1", "a"}, {"1", "b"}}));
        CHECK(j["bars"][1]["death"].is_null());
    }

    SECTION("prime fields and dimension cap") {
        auto res = run_cli("barcode --field z5 --input \"" + flt + "\" --max-dim 0");
        REQUIRE(res.exit_code == 0);
        CHECK_THAT(res.out, ContainsSubstring("field: Z5"));
        CHECK_THAT(res.out, !ContainsSubstring("dim 1"));
    }

    SECTION("verification flag leaves the output unchanged") {
        auto plain = run_cli("barcode --field q --input \"" + flt + "\"");
        auto checked = run_cli("barcode --field q --input \"" + flt + "\" --verify");
        CHECK(checked.exit_code == 0);
        CHECK(checked.out == plain.out);
    }
}

TEST_CASE("snd subcommand", "[cli]") {
    SECTION("the three reference integer matrices") {
        for (const char* name : {"snd_a.mat", "snd_b.mat", "snd_c.mat"}) {
            auto res = run_cli("snd --ring z --input \"" + fixture(name) + "\"");
            CHECK(res.exit_code == 0);
            CHECK_THAT(res.out, ContainsSubstring("rank: 3"));
            CHECK_THAT(res.out, ContainsSubstring("diagonal: 1 1 3"));
            CHECK_THAT(res.out, ContainsSubstring("verified: true"));
        }
    }

    SECTION("graded decomposition from a labeled file") {
        auto res = run_cli("snd --input \"" + fixture("square_bd1.mat") + "\"");
        CHECK(res.exit_code == 0);
        CHECK_THAT(res.out, ContainsSubstring("diagonal: 1 x x"));
        CHECK_THAT(res.out, ContainsSubstring("rowdeg:"));
        CHECK_THAT(res.out, ContainsSubstring("verified: true"));
    }

    SECTION("graded json carries the degree labels") {
        auto res = run_cli("snd --format json --input \"" + fixture("square_bd1.mat") + "\"");
        REQUIRE(res.exit_code == 0);
        auto j = nlohmann::json::parse(res.out);
        CHECK(j["ring"] == "qx");
        CHECK(j["rank"] == 3);
        CHECK(j["diagonal"] == nlohmann::json::array({"1", "x", "x"}));
        CHECK(j["rowdeg"].size() == 4);
        CHECK(j["coldeg"].size() == 5);
        CHECK(j["verified"] == true);
    }

    SECTION("ring flag must agree with the file header") {
        auto res = run_cli("snd --ring q --input \"" + fixture("snd_a.mat") + "\"");
        CHECK(res.exit_code == 1);
        CHECK_THAT(res.err, ContainsSubstring("ring mismatch"));
    }

    SECTION("degree labels need a polynomial ring") {
        auto path = write_temp("zgraded", "1 1 z\n5\nrowdeg 0\ncoldeg 0\n");
        auto res = run_cli("snd --input \"" + path + "\"");
        CHECK(res.exit_code == 1);
        CHECK_THAT(res.err, ContainsSubstring("polynomial ring"));
    }

    SECTION("verify flag accepted") {
        auto res = run_cli("snd --ring z --verify --input \"" + fixture("snd_a.mat") + "\"");
        CHECK(res.exit_code == 0);
    }
}

TEST_CASE("homology subcommand", "[cli]") {
    SECTION("two components with a cycle") {
        auto res = run_cli("homology --ring z --input \"" + fixture("two_components.cplx") + "\"");
        CHECK(res.exit_code == 0);
        CHECK(res.out ==
              "ring: Z\n"
              "H_0: free 2, torsion []\n"
              "H_1: free 1, torsion []\n");
    }

    SECTION("torus in a single dimension") {
        auto res =
            run_cli("homology --ring z --dim 1 --input \"" + fixture("torus9.cplx") + "\"");
        CHECK(res.exit_code == 0);
        CHECK(res.out ==
              "ring: Z\n"
              "H_1: free 2, torsion []\n");
    }

    SECTION("torus json across all dimensions") {
        auto res = run_cli("homology --ring z --format json --input \"" +
                           fixture("torus9.cplx") + "\"");
        REQUIRE(res.exit_code == 0);
        auto j = nlohmann::json::parse(res.out);
        CHECK(j["ring"] == "z");
        REQUIRE(j["homology"].size() == 3);
        CHECK(j["homology"][0]["free"] == 1);
        CHECK(j["homology"][1]["free"] == 2);
        CHECK(j["homology"][2]["free"] == 1);
        for (const auto& g : j["homology"]) CHECK(g["torsion"].empty());
    }

    SECTION("projective plane shows its torsion") {
        auto path = write_temp("rp2", projective_plane_text());
        auto res = run_cli("homology --ring z --input \"" + path + "\"");
        CHECK(res.exit_code == 0);
        CHECK(res.out ==
              "ring: Z\n"
              "H_0: free 1, torsion []\n"
              "H_1: free 0, torsion [2]\n"
              "H_2: free 0, torsion []\n");

        auto res2 = run_cli("homology --ring z2 --input \"" + path + "\"");
        CHECK(res2.exit_code == 0);
        CHECK_THAT(res2.out, ContainsSubstring("H_1: free 1, torsion []"));

        auto res3 = run_cli("homology --ring z3 --verify --input \"" + path + "\"");
        CHECK(res3.exit_code == 0);
        CHECK_THAT(res3.out, ContainsSubstring("H_1: free 0, torsion []"));
    }

    SECTION("verification flag on the integral computation") {
        auto res =
            run_cli("homology --ring z --verify --input \"" + fixture("two_triangles.cplx") + "\"");
        CHECK(res.exit_code == 0);
        CHECK_THAT(res.out, ContainsSubstring("H_1: free 1, torsion []"));
    }
}

TEST_CASE("betti subcommand", "[cli]") {
    const std::string flt = fixture("square.flt");

    SECTION("plain and offset counts") {
        auto res = run_cli("betti --field q --dim 0 --t 0 --p 1 --input \"" + flt + "\"");
        CHECK(res.exit_code == 0);
        CHECK(res.out == "1\n");

        auto res2 = run_cli("betti --field q --dim 0 --t 1 --input \"" + flt + "\"");
        CHECK(res2.exit_code == 0);
        CHECK(res2.out == "2\n");

        auto res3 = run_cli("betti --field q --dim 1 --t 3 --input \"" + flt + "\"");
        CHECK(res3.exit_code == 0);
        CHECK(res3.out == "2\n");
    }

    SECTION("json output") {
        auto res =
            run_cli("betti --field q --dim 0 --t 0 --p 1 --format json --input \"" + flt + "\"");
        REQUIRE(res.exit_code == 0);
        auto j = nlohmann::json::parse(res.out);
        CHECK(j["field"] == "Q");
        CHECK(j["dim"] == 0);
        CHECK(j["t"] == 0);
        CHECK(j["p"] == 1);
        CHECK(j["value"] == 1);

        auto res2 = run_cli("betti --field q --dim 0 --t 1 --format json --input \"" + flt + "\"");
        REQUIRE(res2.exit_code == 0);
        auto j2 = nlohmann::json::parse(res2.out);
        CHECK(j2["p"].is_null());
        CHECK(j2["value"] == 2);
    }

    SECTION("verification flag") {
        auto res =
            run_cli("betti --field z2 --dim 0 --t 0 --p 1 --verify --input \"" + flt + "\"");
        CHECK(res.exit_code == 0);
        CHECK(res.out == "1\n");
    }

    SECTION("missing required options fail usage parsing") {
        auto res = run_cli("betti --field q --dim 0 --input \"" + flt + "\"");
        CHECK(res.exit_code == 1);
    }
}

TEST_CASE("input validation and exit codes", "[cli]") {
    SECTION("missing input file") {
        auto res = run_cli("barcode --field q --input /nonexistent/nope.flt");
        CHECK(res.exit_code == 1);
        CHECK_THAT(res.err, ContainsSubstring("error:"));
        CHECK_THAT(res.err, ContainsSubstring("cannot open"));
    }

    SECTION("filtration missing a face") {
        auto path = write_temp("open", "0 a b\n");
        auto res = run_cli("barcode --field q --input \"" + path + "\"");
        CHECK(res.exit_code == 1);
        CHECK_THAT(res.err, ContainsSubstring("error:"));
    }

    SECTION("duplicate events are lenient by default, strict on request") {
        auto path = write_temp("dup", "0 a\n1 a\n");
        auto res = run_cli("barcode --field q --input \"" + path + "\"");
        CHECK(res.exit_code == 0);
        CHECK_THAT(res.err, ContainsSubstring("warning:"));
        CHECK_THAT(res.err, ContainsSubstring("duplicate"));
        CHECK_THAT(res.out, ContainsSubstring("dim 0: [0, inf)"));

        auto strict = run_cli("barcode --field q --strict --input \"" + path + "\"");
        CHECK(strict.exit_code == 1);
        CHECK_THAT(strict.err, ContainsSubstring("duplicate"));
    }

    SECTION("usage errors") {
        CHECK(run_cli("frobnicate").exit_code == 1);
        CHECK(run_cli("barcode --field q").exit_code == 1);  // no --input
        CHECK(run_cli("barcode --field z9 --input \"" + fixture("square.flt") + "\"").exit_code ==
              1);
        CHECK(run_cli("barcode --field q --format yaml --input \"" + fixture("square.flt") +
                      "\"")
                  .exit_code == 1);
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("snd --help").exit_code == 0);
    }
}
