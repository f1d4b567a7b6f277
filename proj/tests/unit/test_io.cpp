#include <doctest.h>

#include <json.hpp>

#include "../support/fixtures.hpp"
#include "piercing/errors.hpp"
#include "piercing/instance_gen.hpp"
#include "piercing/io.hpp"
#include "piercing/piercing_t1.hpp"

using namespace piercing;
using namespace piercing::testing;

TEST_SUITE("cli_io") {

TEST_CASE("instance round trip") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 3 + seed % 4;
        cfg.members = 2 + seed % 9;
        cfg.spread = q(5, 3);
        Family f = random_family(random_template(cfg), cfg);
        std::string text = serialize_instance(f);
        Family g = parse_instance(text);
        CHECK(g.tmpl.normals == f.tmpl.normals);
        CHECK(g.tmpl.reference_offsets == f.tmpl.reference_offsets);
        REQUIRE(g.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(g.members[i].offsets == f.members[i].offsets);
        CHECK(serialize_instance(g) == text);
    }
}

TEST_CASE("handwritten instance") {
    const char* text = R"({"version": 1,
        "template": {"normals": [[0,-1],[-1,0],[1,1]], "reference_offsets": ["0","0","1"]},
        "members": [{"offsets": {"0": "0", "1": "0", "2": "1"}},
                    {"offsets": {"0": "0", "1": "-3/5", "2": "8/5"}},
                    {"offsets": {"0": "-3/5", "1": "0", "2": "8/5"}}]})";
    Family f = parse_instance(text);
    CHECK(f.size() == 3);
    CHECK(f.members[1].offsets.at(1) == q(-3, 5));
    CHECK(pierce_t1(f).points.size() == 3);
}

TEST_CASE("invalid instances") {
    CHECK_THROWS_AS(parse_instance("not json"), InvalidInput);
    CHECK_THROWS_AS(parse_instance(R"({"version": 2})"), InvalidInput);
    // Bad rational.
    CHECK_THROWS_AS(parse_instance(R"({"version": 1,
        "template": {"normals": [[0,-1],[-1,0],[1,1]], "reference_offsets": ["0","0","1/0"]},
        "members": [{"offsets": {"0": "0"}}]})"),
                    InvalidInput);
    // Direction index out of range.
    CHECK_THROWS_AS(parse_instance(R"({"version": 1,
        "template": {"normals": [[0,-1],[-1,0],[1,1]], "reference_offsets": ["0","0","1"]},
        "members": [{"offsets": {"5": "0"}}]})"),
                    InvalidInput);
    // Template open on one side.
    CHECK_THROWS_AS(parse_instance(R"({"version": 1,
        "template": {"normals": [[0,-1],[1,0],[0,1]], "reference_offsets": ["0","1","1"]},
        "members": [{"offsets": {"0": "0"}}]})"),
                    InvalidInput);
    // Empty member.
    CHECK_THROWS_AS(parse_instance(R"({"version": 1,
        "template": {"normals": [[0,-1],[-1,0],[1,1]], "reference_offsets": ["0","0","1"]},
        "members": [{"offsets": {"0": "0", "1": "0", "2": "-1"}}]})"),
                    InvalidInput);
}

TEST_CASE("result round trip") {
    PiercingResult r = pierce_t1(three_translate());
    ResultFile file = make_result_file(r, true);
    CHECK(file.bound == "3");
    std::string text = serialize_result(file);
    CHECK(parse_result(text) == file);
    CHECK(parse_points(text) == r.points);
    CHECK(text.find("timings") == std::string::npos);

    file.elapsed_ms = 1.5;
    CHECK(serialize_result(file).find("timings") != std::string::npos);

    CHECK(parse_points(R"({"points": [["1/2", "-3"]]})") == std::vector<Point>{pt(q(1, 2), q(-3))});
    CHECK_THROWS_AS(parse_points(R"({"nothing": []})"), InvalidInput);
}

TEST_CASE("counterexample record replays") {
    Family f = three_translate();
    ClaimViolation v("t1.soundness", "member 1 is not pierced");
    std::string text = serialize_counterexample(f, "t1", v);
    CHECK(text.find("t1.soundness") != std::string::npos);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("claim") == "t1.soundness");
    Family replay = parse_instance(j.at("instance").dump());
    CHECK(serialize_instance(replay) == serialize_instance(f));
}

}
