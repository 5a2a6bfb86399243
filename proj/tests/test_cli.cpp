// Copyright 2026 The concroc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "concroc/cli.hpp"
#include "concroc/errors.hpp"
#include "concroc/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = concroc::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "concroc_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string four_rows() { return write_file("four.csv", "value,status\n1,0\n2,0\n3,1\n4,1\n"); }

std::string normal_file() {
    std::ostringstream s;
    s << "# synthetic marker data\nmarker,group\n";
    for (int i = 0; i < 40; ++i) s << (std::sin(i * 1.3) + 0.02 * i) << ",0\n";
    for (int i = 0; i < 35; ++i) s << (1.0 + std::cos(i * 0.7) + 0.03 * i) << ",1\n";
    return write_file("normal.csv", s.str());
}

void set_threads(const char* v) { ::setenv("CONCROC_THREADS", v, 1); }

}  // namespace

TEST_CASE("CSV splitting and dialect") {
    const auto d = concroc::parse_csv("value,status\n1,0\n2,0\n3,1\n4,1\n");
    CHECK(d.controls == std::vector<double>{1, 2});
    CHECK(d.cases == std::vector<double>{3, 4});

    const auto c = concroc::parse_csv("# comment\n\nid;status;x\n a ; 1 ; 2.5\nb;0;1e-1\nc;1;+3\nd;0;-2\n",
                                      {';', "x", "status", false});
    CHECK(c.controls == std::vector<double>{0.1, -2});
    CHECK(c.cases == std::vector<double>{2.5, 3});

    const auto idx = concroc::parse_csv("s,v\n0,5\n0,6\n1,7\n1,9\n", {',', "2", "1", false});
    CHECK(idx.controls == std::vector<double>{5, 6});

    const auto logged = concroc::parse_csv("v,s\n1,0\n2,0\n3,1\n4,1\n", {',', "", "", true});
    CHECK(logged.cases[1] == doctest::Approx(std::log(4.0)));
    CHECK(concroc::parse_csv("v,s\n1,0\n2,0\n3,1\n4,1\n").digest == concroc::fnv1a64("v,s\n1,0\n2,0\n3,1\n4,1\n"));
    CHECK(concroc::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(concroc::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("CSV errors name the line") {
    auto message = [](const std::string& text, concroc::CsvOptions o = {}) {
        try {
            concroc::parse_csv(text, o);
        } catch (const concroc::Error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("v,s\n1,0\n0,0\n3,1\n4,1\n", {',', "", "", true}).find("line 3") != std::string::npos);
    CHECK(message("v,s\n1,0\n2,2\n").find("line 3") != std::string::npos);
    CHECK(message("v,s\n1,0\nabc,0\n").find("line 3") != std::string::npos);
    CHECK(message("v,s\n1,0\n2\n").find("line 3") != std::string::npos);
    CHECK(message("v,s\n1,0\n1,0\n3,1\n4,1\n").find("fewer than 2 distinct") != std::string::npos);
    CHECK(message("v,s\n1,0\n2,0\n3,1\n4,1\n", {',', "value", "", false}).find("no column") != std::string::npos);
    CHECK(message("# only comments\n").find("no header") != std::string::npos);
    CHECK(message("v,s\n1,0\ninf,0\n").find("line 3") != std::string::npos);
    CHECK_THROWS_AS(concroc::load_csv((scratch() / "missing.csv").string()), concroc::Error);
}

TEST_CASE("canonical input shape: 51 controls and 90 cases") {
    std::ostringstream s;
    s << "ca199,cancer\n";
    for (int i = 0; i < 141; ++i) s << (10.0 + i * 1.7) << ',' << (i < 51 ? 0 : 1) << '\n';
    const auto d = concroc::parse_csv(s.str(), {',', "", "", true});
    CHECK(d.controls.size() == 51);
    CHECK(d.cases.size() == 90);
}

TEST_CASE("roc command on the four-row file") {
    const auto r = run({"roc", "--input", four_rows(), "--methods", "empirical", "--grid-n", "5", "--output", "-"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<double> col;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        col.push_back(std::stod(line.substr(line.find(',') + 1)));
    }
    REQUIRE(col.size() == 5);
    for (std::size_t i = 1; i < col.size(); ++i) CHECK(col[i] >= col[i - 1]);
    CHECK(col.back() == 1.0);
}

TEST_CASE("roc command writes CSV and SVG for several methods") {
    const std::string csv = (scratch() / "roc.csv").string();
    const std::string svg = (scratch() / "roc.svg").string();
    const auto r = run({"roc", "--input", normal_file(), "--methods", "empirical,logcon,logcon-smooth,binormal",
                        "--grid-n", "101", "--output", csv, "--svg", svg});
    REQUIRE(r.code == 0);
    const std::string text = read_file(csv);
    CHECK(text.find("t,empirical,logcon,logcon-smooth,binormal\n") != std::string::npos);
    const std::string plot = read_file(svg);
    std::size_t polylines = 0;
    for (std::size_t p = plot.find("<polyline"); p != std::string::npos; p = plot.find("<polyline", p + 1)) ++polylines;
    CHECK(polylines == 4);
}

TEST_CASE("auc command") {
    const std::string path = write_file("auc.csv", "v,s\n1,0\n3,0\n2,1\n4,1\n");
    const auto r = run({"auc", "--input", path, "--methods", "empirical,binormal"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["auc"]["empirical"].get<double>() == 0.75);
    CHECK(j.contains("binormal"));
    CHECK(j["seed"].get<std::uint64_t>() == 1);
    CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("fit JSON reloads to the same density") {
    const std::string out = (scratch() / "fit.json").string();
    const std::string grid = (scratch() / "density.csv").string();
    const auto r = run({"fit", "--input", normal_file(), "--smoothed", "--output", out, "--density-grid", grid,
                        "--grid-n", "64"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(read_file(out));
    const auto d = concroc::load_csv(normal_file());
    const auto direct = concroc::fit_logconcave(concroc::preprocess(d.controls));
    const auto reloaded = concroc::fit_from_json(j["groups"]["controls"]);
    CHECK(reloaded.knots() == direct.knots());
    CHECK(reloaded.phi() == direct.phi());
    for (double x = -1.5; x < 2.5; x += 0.01) {
        CHECK(std::abs(reloaded.pdf(x) - direct.pdf(x)) <= 1e-12);
        CHECK(std::abs(reloaded.cdf(x) - direct.cdf(x)) <= 1e-12);
    }
    CHECK(j["groups"]["cases"]["gamma"].get<double>() > 0.0);
    std::istringstream in(read_file(grid));
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line[0] != 'x') ++rows;
    }
    CHECK(rows == 64);
    CHECK_THROWS_AS(concroc::fit_from_json(json{{"knots", {0, 1}}}), concroc::Error);
}

TEST_CASE("exit codes and error JSON") {
    const std::string zero = write_file("zero.csv", "v,s\n0,0\n1,0\n2,1\n3,1\n");
    auto r = run({"fit", "--input", zero, "--log-transform", "--output", "-"});
    CHECK(r.code == 2);
    const auto e = json::parse(r.err);
    CHECK(e["error"]["code"] == "InputFormat");
    CHECK(e["error"]["message"].get<std::string>().find("line 2") != std::string::npos);

    CHECK(run({"roc", "--input", four_rows(), "--methods", "nonsense", "--output", "-"}).code == 2);
    CHECK(run({"roc", "--input", four_rows(), "--output", "/nonexistent-dir/x.csv"}).code == 2);
    CHECK(run({"simulate", "--scenario", "13"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"confint", "--input", four_rows(), "--t", "0.5,1.5"}).code == 2);
    CHECK(concroc::is_numerical(concroc::ErrorCode::MaxIterExceeded));
    CHECK_FALSE(concroc::is_numerical(concroc::ErrorCode::InputFormat));
}

TEST_CASE("confint and simulate are byte-identical across thread counts") {
    const std::string input = normal_file();
    set_threads("1");
    const auto a = run({"confint", "--input", input, "--B", "60", "--seed", "42"});
    const auto sa = run({"simulate", "--scenario", "1", "--M", "12", "--seed", "42"});
    set_threads("4");
    const auto b = run({"confint", "--input", input, "--B", "60", "--seed", "42"});
    const auto sb = run({"simulate", "--scenario", "1", "--M", "12", "--seed", "42"});
    set_threads("0");
    const auto c = run({"confint", "--input", input, "--B", "60", "--seed", "42"});
    ::unsetenv("CONCROC_THREADS");
    REQUIRE(a.code == 0);
    REQUIRE(sa.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(sa.out == sb.out);
    const auto j = json::parse(sa.out);
    CHECK(j["seed"].get<std::uint64_t>() == 42);
    CHECK(j["estimators"]["logcon"]["ratio"].size() == 12);
}

TEST_CASE("SVG output") {
    const std::vector<double> grid{0.0, 0.5, 1.0};
    const auto one = concroc::render_svg(grid, {{"identity", {0.0, 0.5, 1.0}}});
    CHECK(one.find("points=\"60.00,420.00 240.00,240.00 420.00,60.00\"") != std::string::npos);
    CHECK(one.find("class=\"diagonal\"") != std::string::npos);
    const auto two = concroc::render_svg(grid, {{"a", {0.0, 0.7, 1.0}}, {"b & c", {0.0, 0.6, 1.0}}});
    std::size_t polylines = 0, legends = 0;
    for (std::size_t p = two.find("<polyline"); p != std::string::npos; p = two.find("<polyline", p + 1)) ++polylines;
    for (std::size_t p = two.find("class=\"legend\""); p != std::string::npos; p = two.find("class=\"legend\"", p + 1)) ++legends;
    CHECK(polylines == 2);
    CHECK(legends == 2);
    CHECK(two.find("b &amp; c") != std::string::npos);
    CHECK(two == concroc::render_svg(grid, {{"a", {0.0, 0.7, 1.0}}, {"b & c", {0.0, 0.6, 1.0}}}));
    CHECK_THROWS_AS(concroc::render_svg(grid, {{"short", {0.0}}}), concroc::Error);
}
