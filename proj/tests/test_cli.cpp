/*
   Copyright 2026 The strata-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "strata/cli.hpp"
#include "strata/error.hpp"
#include "strata/experiments.hpp"

using namespace strata;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("strata-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("documented invocations") {
    // y^2 = x^3 + x^2 + 1 over F_3 is ordinary
    auto r = run({"prank", "--p", "3", "--n", "1", "--f", "1,0,1,1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1\n");
    r = run({"clutch", "dim", "--tree", "path:1,1,1", "--f", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2\n");
    r = run({"mono", "sp-order", "--g", "2", "--l", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "51840\n");
}

TEST_CASE("single-curve commands agree with the library") {
    const Field F = Field::make(5);
    for (const auto& r : census(2, F, CensusMode::exhaustive())) {
        if (r.f[0] != 1 || r.f[1] > 1) continue;
        std::string coeffs;
        for (std::size_t i = 0; i < r.f.size(); ++i) coeffs += (i ? "," : "") + std::to_string(r.f[i]);
        CHECK(run({"prank", "--p", "5", "--f", coeffs}).out == std::to_string(r.p_rank) + "\n");
        std::string L;
        for (std::size_t i = 0; i < r.L.a.size(); ++i) L += (i ? "," : "") + r.L.a[i].get_str();
        CHECK(run({"lpoly", "--p", "5", "--f", coeffs}).out == L + "\n");
        const auto np = run({"np", "--p", "5", "--f", coeffs});
        CHECK(np.out == run({"np", "--p", "5", "--L", L}).out);
        CHECK(np.out.find(to_string(r.cls)) != std::string::npos);
    }
    CHECK(run({"lpoly", "--p", "3", "--f", "0,1,0,1"}).out == "1,0,3\n");
    CHECK(run({"np", "--p", "3", "--L", "1,0,3"}).out == "1/2 x2 (supersingular)\n");
    // negative coefficients reduce mod p: x^3 - x over F_5
    CHECK(run({"lpoly", "--p", "5", "--f", "0,-1,0,1"}).out == run({"lpoly", "--p", "5", "--f", "0,4,0,1"}).out);
}

TEST_CASE("exit codes") {
    auto r = run({"bogus"});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"prank", "--p", "3", "--f", "1,0,1,1", "--frobnicate"}).code == kExitValidation);
    CHECK(run({}).code == kExitValidation);
    CHECK(run({"prank", "--p", "4", "--f", "1,0,1,1"}).code == kExitValidation);
    CHECK(run({"prank", "--p", "3", "--f", "0,0,0,1"}).code == kExitValidation);  // x^3 is singular
    CHECK(run({"prank", "--p", "3", "--f", "1,x,1"}).code == kExitValidation);
    CHECK(run({"clutch", "dim", "--tree", "path:1,0", "--f", "0"}).code == kExitValidation);
    CHECK(run({"experiment", "galaxy", "--p", "3"}).code == kExitValidation);
    CHECK(run({"experiment", "class-group", "--g", "1"}).code == kExitValidation);
    CHECK(run({"mono", "bfs", "--g", "2", "--l", "5", "--cap", "1000"}).code == kExitBudget);
    CHECK(run({"census", "--p", "7", "--g", "3", "--budget", "100", "--no-cache"}).code == kExitBudget);
    // supersingular genus 2 curves never reach the maximal splitting degree
    CHECK(run({"experiment", "splitting", "--p", "5", "--g", "2", "--f", "0", "--no-cache"}).code == kExitFailed);
    r = run({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("experiment") != std::string::npos);
}

TEST_CASE("clutch calculators") {
    auto r = run({"clutch", "labelings", "--tree", "path:1,1,1", "--f", "2"});
    CHECK(r.out == "0,1,1\n1,0,1\n1,1,0\n");
    r = run({"clutch", "coalesce", "--tree", "path:1,1,1", "--edge", "0"});
    CHECK(parse_tree(r.out.substr(0, r.out.size() - 1)).canonical_form() ==
          ClutchingTree::path({2, 1}).canonical_form());
    r = run({"clutch", "catalog", "--g", "2"});
    CHECK(r.out.find("Delta_1") != std::string::npos);
    CHECK(r.out.find("Xi_0") != std::string::npos);
    r = run({"clutch", "witness", "--g", "3", "--f", "2", "--p", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("p-ranks 1,1,0") != std::string::npos);
}

TEST_CASE("tree specs") {
    CHECK(parse_tree("single:4").genus() == 4);
    CHECK(parse_tree("path:1,2,3").edges().size() == 2);
    const auto s = parse_tree("star:2;1,1,1");
    CHECK(s.degree(0) == 3);
    CHECK(s.genus() == 5);
    const auto t = parse_tree("tree:1,1,1,1;0-1,0-2,0-3");
    CHECK(t.canonical_form() == ClutchingTree::star(1, {1, 1, 1}).canonical_form());
    CHECK(parse_tree(format_tree(t)).canonical_form() == t.canonical_form());
    CHECK(parse_tree("tree:3;").size() == 1);
    CHECK_THROWS_AS(parse_tree("path"), ValidationError);
    CHECK_THROWS_AS(parse_tree("ring:1,1"), ValidationError);
    CHECK_THROWS_AS(parse_tree("tree:1,1;0-1,1-0"), ValidationError);
    CHECK_THROWS_AS(parse_tree("tree:1,1;01"), ValidationError);
}

TEST_CASE("coefficient tokens") {
    const Field F9 = Field::make(3, 2);
    const auto c = parse_coefficients(F9, "1:2,4,0:1");
    REQUIRE(c.size() == 3);
    CHECK(F9.coords(c[0]) == std::vector<elem_t>{1, 2});
    CHECK(c[1] == 4);
    CHECK(F9.coords(c[2]) == std::vector<elem_t>{0, 1});
    CHECK(parse_coefficients(F9, "2") == std::vector<elem_t>{2});
    CHECK_THROWS_AS(parse_coefficients(F9, "9"), ValidationError);
    CHECK_THROWS_AS(parse_coefficients(F9, "1:1:1"), ValidationError);
    CHECK_THROWS_AS(parse_coefficients(F9, ""), ValidationError);
    const Field F5 = Field::make(5);
    CHECK(parse_coefficients(F5, "-1, 7 ,+2") == std::vector<elem_t>{4, 2, 2});
    // y^2 = x^3 + x over F_9 via both token styles
    CHECK(run({"lpoly", "--p", "3", "--n", "2", "--f", "0,1,0,1"}).out ==
          run({"lpoly", "--p", "3", "--n", "2", "--f", "0:0,1:0,0,1:0"}).out);
}

TEST_CASE("field orders") {
    CHECK(field_from_order(9).n() == 2);
    CHECK(field_from_order(9).p() == 3);
    CHECK(field_from_order(7).n() == 1);
    CHECK(field_from_order(125).n() == 3);
    CHECK_THROWS_AS(field_from_order(6), ValidationError);
    CHECK_THROWS_AS(field_from_order(1), ValidationError);
}

TEST_CASE("census output is reproducible under the default seed") {
    const auto a = run({"census", "--p", "5", "--g", "2", "--sample", "20", "--no-cache"});
    const auto b = run({"census", "--p", "5", "--g", "2", "--sample", "20", "--no-cache", "--workers", "2"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        CHECK(record_from_json(json::parse(line)).g == 2);
        ++n;
    }
    CHECK(n == 20);
    CHECK(a.out != run({"census", "--p", "5", "--g", "2", "--sample", "20", "--seed", "3", "--no-cache"}).out);
}

TEST_CASE("census file output and cache directory") {
    TempDir dir;
    const std::string file = (dir.path / "out.jsonl").string();
    auto r = run({"census", "--p", "3", "--g", "1", "--output", file, "--cache-dir", dir.str()});
    CHECK(r.out == "18 records written to " + file + "\n");
    CHECK(fs::exists(dir.path / "census_p3_n1_g1.jsonl"));
    std::ifstream a(file), b(dir.path / "census_p3_n1_g1.jsonl");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("cache directory from the environment") {
    TempDir dir;
    const char* old = std::getenv("STRATA_FORGE_CACHE");
    const std::string saved = old ? old : "";
    ::setenv("STRATA_FORGE_CACHE", dir.str().c_str(), 1);
    const auto r = run({"experiment", "distribution", "--p", "5", "--g", "1"});
    if (old)
        ::setenv("STRATA_FORGE_CACHE", saved.c_str(), 1);
    else
        ::unsetenv("STRATA_FORGE_CACHE");
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(dir.path / "census_p5_n1_g1.jsonl"));
}

TEST_CASE("reports are re-rendered from the saved file alone") {
    TempDir dir;
    const std::string report = (dir.path / "cg.json").string();
    const std::string cache = (dir.path / "cache").string();
    const auto r = run({"experiment", "class-group", "--p", "7", "--g", "1", "--f", "1", "--l", "3", "--output", report,
                        "--cache-dir", cache});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    fs::remove_all(cache);
    const auto again = run({"report", report});
    CHECK(again.code == kExitOk);
    CHECK(again.out == r.out);

    std::ifstream in(report);
    const json j = json::parse(in);
    CHECK(j.at("schema") == kSchemaVersion);
    const auto cfg = RunConfig::from_json(j.at("parameters").at("config"));
    CHECK(cfg.p == 7);
    CHECK(cfg.seed == kDefaultSeed);
    CHECK(cfg.cache_dir == cache);
    CHECK(cfg.to_json() == j.at("parameters").at("config"));
    CHECK(run({"report", report, "--json"}).out == j.dump(2) + "\n");

    CHECK(run({"report", (dir.path / "missing.json").string()}).code == kExitValidation);
    std::ofstream(dir.path / "junk.json") << "{not json";
    CHECK(run({"report", (dir.path / "junk.json").string()}).code == kExitValidation);
}

TEST_CASE("failed reports keep their exit code on re-render") {
    TempDir dir;
    const std::string report = (dir.path / "s.json").string();
    const auto r = run({"experiment", "splitting", "--p", "5", "--g", "2", "--f", "0", "--output", report, "--no-cache"});
    CHECK(r.code == kExitFailed);
    CHECK(run({"report", report}).code == kExitFailed);
}

TEST_CASE("experiment commands") {
    auto r = run({"experiment", "notss", "--q-list", "3", "--no-cache"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1/3") != std::string::npos);
    r = run({"experiment", "notss", "--g", "2", "--q-list", "3,5", "--no-cache"});
    CHECK(r.code == kExitOk);
    r = run({"experiment", "simple", "--p", "3", "--n", "2", "--g", "2", "--f", "2", "--no-cache", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out).at("passed") == true);
    r = run({"experiment", "chebotarev", "--p", "7", "--g", "1", "--f", "1", "--l", "3", "--no-cache"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[info]") != std::string::npos);
    r = run({"experiment", "class-group", "--p", "7", "--g", "1", "--f", "1", "--l", "3", "--no-cache", "--tolerance",
             "0"});
    CHECK(r.code == kExitFailed);
}

TEST_CASE("baseline table") {
    auto r = run({"mono", "baseline", "--g-max", "1", "--l-list", "3,5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("g,l,m,proportion_num,proportion_den,estimate,ci_low,ci_high,N\n", 0) == 0);
    CHECK(r.out.find("1,3,1,3,8,") != std::string::npos);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 1 + 2 + 4);
    r = run({"mono", "baseline", "--g-max", "1", "--l-list", "5", "--cap", "10", "--samples", "2000"});
    CHECK(r.out.find(",2000\n") != std::string::npos);
}

TEST_CASE("run config round trip") {
    RunConfig c;
    c.command = "experiment";
    c.p = 13;
    c.g = 2;
    c.samples = 77;
    c.tolerance = 0.2;
    c.q_list = {3, 9};
    c.cache_dir = "/tmp/x";
    CHECK(RunConfig::from_json(c.to_json()).to_json() == c.to_json());
    CHECK_THROWS_AS(RunConfig::from_json(json::object()), ValidationError);
}
