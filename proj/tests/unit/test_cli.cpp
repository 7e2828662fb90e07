#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "udgcut");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = udgcut::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(UDGCUT_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

const char* kK5 = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("reduce then solve recovers mc") {
    const std::string in = temp_file("k5.txt", kK5);
    const std::string json = std::string(UDGCUT_TEST_TMP) + "/k5.json";
    const Run r = run({"reduce", "--in", in, "--out", json});
    CHECK(r.code == 0);
    CHECK(r.out.find("k 14") != std::string::npos);
    const Run s = run({"solve", "--in", json});
    CHECK(s.code == 0);
    CHECK(s.out.find("recovered 6") != std::string::npos);
    const Run v = run({"validate", "--in", json});
    CHECK(v.code == 0);
    CHECK(v.out.find("precision2 1/2") != std::string::npos);
    const Run p = run({"planarity", "--in", json});
    CHECK(p.out == "not_planar_drawing\n");
}

TEST_CASE("reduce is byte-identical across runs") {
    const std::string in = temp_file("k5b.txt", kK5);
    const Run a = run({"reduce", "--in", in});
    const Run b = run({"reduce", "--in", in});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 1000);
}

TEST_CASE("solve") {
    CHECK(run({"solve", "--in", temp_file("k5c.txt", kK5), "--cut"}).out.rfind("size 6\n", 0) == 0);
    const std::string c4 = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(run({"solve", "--in", c4, "--bisection"}).out.rfind("size 4\n", 0) == 0);
    CHECK(run({"solve", "--in", c4, "--method", "dp"}).out.rfind("size 4\n", 0) == 0);
    const std::string p3 = temp_file("p3.txt", "3 2\n0 1\n1 2\n");
    CHECK(run({"solve", "--in", p3, "--bisection"}).code == 2);
    CHECK(run({"solve", "--in", p3, "--method", "nope"}).code == 2);
}

TEST_CASE("exit codes") {
    const std::string star = temp_file("star.txt", "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n");
    CHECK(run({"reduce", "--in", star}).code == 2);
    CHECK(run({"reduce", "--in", temp_file("bad.txt", "2 1\n0 0\n")}).code == 2);
    CHECK(run({"reduce", "--in", "/nonexistent/file"}).code == 2);
    CHECK(run({"render", "--in", temp_file("bad.json", "{not json")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const std::string wrong = temp_file(
        "wrong.json", R"({"vertices": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 40, "y": 0}], "edges": [[0, 1]]})");
    const Run v = run({"validate", "--in", wrong});
    CHECK(v.code == 1);
    CHECK(v.out.find("edge_too_long 0 1 dist2 4") != std::string::npos);
    const std::string k2 = temp_file("k2.txt", "2 1\n0 1\n");
    CHECK(run({"reduce", "--in", k2, "--out", k2}).code == 2);
}

TEST_CASE("render") {
    const std::string h = temp_file(
        "h.json",
        R"({"vertices": [{"id":0,"x":10,"y":0},{"id":1,"x":0,"y":10},{"id":2,"x":-10,"y":0},{"id":3,"x":0,"y":-10},)"
        R"({"id":4,"x":16,"y":16},{"id":5,"x":-16,"y":16},{"id":6,"x":-16,"y":-16},{"id":7,"x":16,"y":-16}],)"
        R"("edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3],[0,4],[1,4],[1,5],[2,5],[2,6],[3,6],[3,7],[0,7]]})");
    const Run r = run({"render", "--in", h});
    CHECK(r.code == 0);
    std::size_t circles = 0, lines = 0;
    for (std::size_t p = r.out.find("<circle"); p != std::string::npos; p = r.out.find("<circle", p + 1)) ++circles;
    for (std::size_t p = r.out.find("<line"); p != std::string::npos; p = r.out.find("<line", p + 1)) ++lines;
    CHECK(circles == 8);
    CHECK(lines == 14);
    CHECK(r.out.find("r=\"10\"") != std::string::npos);

    const Run e = run({"render", "--in", temp_file("e.json", R"({"vertices": [], "edges": []})")});
    CHECK(e.code == 0);
    CHECK(e.out.find("<svg") == 0);
    CHECK(e.out.find("<circle") == std::string::npos);
}

TEST_CASE("certify command") {
    const Run ok = run({"certify", "--subdivision", "10", "--gadget", "5", "--reduction", "1", "--skip-named"});
    CHECK(ok.code == 0);
    const Run vacuous = run({"certify", "--subdivision", "0", "--gadget", "0", "--reduction", "0", "--skip-named"});
    CHECK(vacuous.code == 0);
    CHECK(vacuous.out.find("instances=0") != std::string::npos);
    const Run neg = run({"certify", "--relax-gadget", "--subdivision", "0", "--gadget", "1", "--reduction", "0",
                         "--skip-named"});
    CHECK(neg.code == 1);
    CHECK(neg.out.find("10 != 12") != std::string::npos);
}

TEST_CASE("draw") {
    const Run d = run({"draw", "--in", temp_file("k3.txt", "3 3\n0 1\n1 2\n0 2\n")});
    CHECK(d.code == 0);
    CHECK(d.out.find("\"routes\"") != std::string::npos);
}
