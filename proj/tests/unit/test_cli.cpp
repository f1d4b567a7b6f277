#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "../support/fixtures.hpp"
#include "cli.hpp"
#include "piercing/io.hpp"

using namespace piercing;
using namespace piercing::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "piercer");
    std::ostringstream out, err;
    int code = piercer::cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("piercer_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_SUITE("cli_io") {

TEST_CASE("pierce t1 on the three-translate family") {
    TempDir dir;
    write_file(dir.file("f.json"), serialize_instance(three_translate()));
    Run r = run({"pierce", dir.file("f.json"), "--algo", "t1", "--out", dir.file("r.json")});
    CHECK(r.code == piercer::kSuccess);
    ResultFile res = parse_result(read_file(dir.file("r.json")));
    CHECK(res.points.size() == 3);
    CHECK(res.verified);

    Run v = run({"verify", dir.file("f.json"), "--points", dir.file("r.json")});
    CHECK(v.code == piercer::kSuccess);

    Run e = run({"exact", dir.file("f.json")});
    CHECK(e.code == piercer::kSuccess);
    CHECK(e.out.find("optimum: 2") != std::string::npos);

    Run t2 = run({"pierce", dir.file("f.json"), "--algo", "t2"});
    CHECK(t2.code == piercer::kInvalidInput);
}

TEST_CASE("check reports disjoint pairs") {
    TempDir dir;
    Family apart{unit_triangle(), {unit_translate(pt(0, 0)), unit_translate(pt(2, 2))}};
    write_file(dir.file("f.json"), serialize_instance(apart));
    Run r = run({"check", dir.file("f.json")});
    CHECK(r.code == piercer::kInvalidInput);
    CHECK(r.err.find("0 1") != std::string::npos);

    write_file(dir.file("g.json"), serialize_instance(three_translate()));
    Run ok = run({"check", dir.file("g.json")});
    CHECK(ok.code == piercer::kSuccess);
    CHECK(ok.out.find("empty_triangles=1") != std::string::npos);
}

TEST_CASE("verify with no points fails") {
    TempDir dir;
    write_file(dir.file("f.json"), serialize_instance(three_translate()));
    write_file(dir.file("p.json"), R"({"points": []})");
    Run r = run({"verify", dir.file("f.json"), "--points", dir.file("p.json")});
    CHECK(r.code == piercer::kVerificationFailure);
    CHECK(r.err.find("0 1 2") != std::string::npos);
}

TEST_CASE("bad input exits 2") {
    TempDir dir;
    write_file(dir.file("bad.json"), "{");
    CHECK(run({"check", dir.file("bad.json")}).code == piercer::kInvalidInput);
    CHECK(run({"check", dir.file("missing.json")}).code == piercer::kInvalidInput);
    CHECK(run({"frobnicate"}).code == piercer::kInvalidInput);
    CHECK(run({"generate", "--seed", "1", "--n", "2", "--members", "3"}).code == piercer::kInvalidInput);
}

TEST_CASE("generate, render and timings") {
    TempDir dir;
    Run g = run({"generate", "--seed", "4", "--n", "5", "--members", "6", "--spread", "3/2", "--out",
                 dir.file("f.json")});
    REQUIRE(g.code == piercer::kSuccess);
    Run g2 = run({"generate", "--seed", "4", "--n", "5", "--members", "6", "--spread", "3/2"});
    CHECK(g2.out == read_file(dir.file("f.json")));

    CHECK(run({"pierce", dir.file("f.json"), "--out", dir.file("a.json")}).code == piercer::kSuccess);
    CHECK(run({"pierce", dir.file("f.json"), "--out", dir.file("b.json")}).code == piercer::kSuccess);
    CHECK(read_file(dir.file("a.json")) == read_file(dir.file("b.json")));
    CHECK(run({"pierce", dir.file("f.json"), "--timings", "--out", dir.file("c.json")}).code == piercer::kSuccess);
    CHECK(read_file(dir.file("c.json")).find("timings") != std::string::npos);

    CHECK(run({"render", dir.file("f.json"), "--points", dir.file("a.json"), "--svg", dir.file("f.svg")}).code ==
          piercer::kSuccess);
    CHECK(read_file(dir.file("f.svg")).find("<circle") != std::string::npos);
}

TEST_CASE("bench prints one CSV row per run") {
    Run b = run({"bench", "--seeds", "0..4", "--n", "4", "--members", "3..6", "--class", "theorem2", "--algo",
                 "t1,t2", "--limit", "8"});
    CHECK(b.code == piercer::kSuccess);
    std::istringstream lines(b.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "seed,algorithm,n,members,N0,points,bound,oracle_opt,verified,status");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.substr(line.size() - 3) == ",ok");
    }
    CHECK(rows == 10);
    CHECK(b.err.find("# t2 n=4: ") != std::string::npos);
}

}
