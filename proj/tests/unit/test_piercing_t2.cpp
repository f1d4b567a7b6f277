#include <doctest.h>

#include "../support/fixtures.hpp"
#include "piercing/errors.hpp"
#include "piercing/instance_gen.hpp"
#include "piercing/oracle.hpp"
#include "piercing/piercing_t2.hpp"

using namespace piercing;
using namespace piercing::testing;

TEST_SUITE("piercing_t2") {

TEST_CASE("classify_special examples") {
    Template t{{Direction(0, -1), Direction(1, 0), Direction(-1, 2), Direction(-1, 1)}, {q(1), q(1), q(1), q(1)}};
    auto form = classify_special(t);
    REQUIRE(form.has_value());
    CHECK(form->h_index == 0);
    CHECK(form->v_index == 1);
    REQUIRE(form->slopes.size() == 2);
    CHECK(form->slopes[0] == std::pair<DirIndex, Rational>{2, q(1, 2)});
    CHECK(form->slopes[1] == std::pair<DirIndex, Rational>{3, q(1)});

    CHECK(classify_special(special_triangle()).has_value());
    CHECK_FALSE(classify_special(unit_triangle()).has_value());
    // Negative slope edge.
    Template neg{{Direction(0, -1), Direction(1, 0), Direction(1, 1), Direction(-1, 0)}, {q(1), q(1), q(1), q(1)}};
    CHECK_FALSE(classify_special(neg).has_value());
}

TEST_CASE("teo_check examples") {
    const Template t = special_triangle();
    const std::array<Point, 3> medial{pt(q(-1, 2), q(3, 5)), pt(q(-3, 5), q(1, 2)), pt(q(-1, 2), q(1, 2))};
    const TriangleType all{{0, 1, 2}};
    CHECK(teo_check(t, member({{0, q(0)}, {1, q(0)}, {2, q(1)}}), medial, all));
    // y >= 1/2 and x <= -1/2 both cut the medial triangle.
    CHECK_FALSE(teo_check(t, member({{0, q(-1, 2)}, {1, q(-1, 2)}}), medial, all));
    // Missing directions are ignored.
    CHECK(teo_check(t, member({{0, q(-1, 2)}}), medial, all));
}

TEST_CASE("n = 3 emits the three midpoints") {
    Family f = special_three_translate();
    PiercingResult r = pierce_t2(f);
    CHECK(r.algorithm == "t2");
    CHECK(r.bound == 3);
    CHECK(r.initial_type_count == 1);
    CHECK(r.points == std::vector<Point>{pt(q(-1, 2), q(3, 5)), pt(q(-3, 5), q(1, 2)), pt(q(-1, 2), q(1, 2))});
    CHECK(verify_piercing(f, r.points).ok);
}

TEST_CASE("n = 3 without empty triangle emits one point") {
    const Template t = special_triangle();
    RelatedPolygon base = member({{0, q(0)}, {1, q(0)}, {2, q(1)}});
    Family f{t, {base, base.translated(t, pt(q(-1, 4), q(1, 4)))}};
    PiercingResult r = pierce_t2(f);
    CHECK(r.points.size() == 1);
    CHECK(r.final_witness == std::size_t{0});
    CHECK(verify_piercing(f, r.points).ok);
}

TEST_CASE("other templates are rejected") {
    CHECK_THROWS_AS(pierce_t2(three_translate()), NotSpecialClass);
}

TEST_CASE("property: sound and within 4(n-2), case 2 exercised") {
    std::size_t case2 = 0, steps = 0;
    for (std::uint64_t seed = 0; seed < 240; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 3 + seed % 4;
        cfg.members = 4 + seed % 7;
        cfg.spread = q(3);
        cfg.class_mode = ClassMode::theorem2;
        Family f = random_family(random_template(cfg), cfg);
        CAPTURE(seed);
        PiercingResult r = pierce_t2(f);
        CHECK(verify_piercing(f, r.points).ok);
        const std::size_t n = cfg.n;
        CHECK(r.bound == (n == 3 ? BigInt(3) : BigInt(static_cast<unsigned long>(4 * (n - 2)))));
        CHECK(BigInt(static_cast<unsigned long>(r.points.size())) <= r.bound);
        if (n >= 4) CHECK(r.loop.size() <= n - 2);
        for (const LoopStep& st : r.loop) {
            ++steps;
            if (st.case_number != 2) {
                CHECK(st.below_lines.empty());
                continue;
            }
            ++case2;
            REQUIRE(st.construction.has_value());
            const Case2Construction& c = *st.construction;
            CHECK(c.h_s.on_boundary(c.H));
            CHECK(c.h_s.on_boundary(c.P));
            CHECK(c.v_s.on_boundary(c.P));
            CHECK(std::find(st.below_lines.begin(), st.below_lines.end(), c.chosen_i) != st.below_lines.end());
            CHECK(c.T_i_vertices == std::array<Point, 3>{c.H, c.X, c.Y});
            CHECK(std::find(r.points.begin(), r.points.end(), c.X) != r.points.end());
        }
        PiercingResult again = pierce_t2(f);
        CHECK(again.points == r.points);
    }
    CHECK(steps > 100);
    CHECK(case2 > 0);
}

}
