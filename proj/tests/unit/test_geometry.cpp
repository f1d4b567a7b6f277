#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/fixtures.hpp"
#include "../support/fm_oracle.hpp"
#include "piercing/errors.hpp"
#include "piercing/geometry.hpp"

using namespace piercing;
using namespace piercing::testing;

namespace {

// y >= c  <=>  (0,-1).p <= -c ;  x >= c  <=>  (-1,0).p <= -c
Halfplane x_at_least(Rational c) { return hp(-1, 0, -c); }
Halfplane x_at_most(Rational c) { return hp(1, 0, std::move(c)); }
Halfplane y_at_least(Rational c) { return hp(0, -1, -c); }

struct RandomSystems {
    std::mt19937_64 rng;
    explicit RandomSystems(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Halfplane halfplane() {
        long a = 0, b = 0;
        while (a == 0 && b == 0) {
            a = integer(-4, 4);
            b = integer(-4, 4);
        }
        return hp(a, b, q(integer(-12, 12), integer(1, 4)));
    }

    std::vector<Halfplane> system(std::size_t size) {
        std::vector<Halfplane> out;
        for (std::size_t i = 0; i < size; ++i) out.push_back(halfplane());
        return out;
    }
};

} // namespace

TEST_SUITE("exact_geometry") {

TEST_CASE("direction is stored in primitive form") {
    CHECK(Direction(4, -6) == Direction(2, -3));
    CHECK(Direction(0, -7) == Direction(0, -1));
    CHECK_FALSE(Direction(1, 1) == Direction(-1, -1));
    CHECK_THROWS_AS(Direction(0, 0), InvalidInput);
}

TEST_CASE("angular order starts at the positive x-axis") {
    std::vector<Direction> ds{Direction(0, -1), Direction(1, 1), Direction(-1, 0), Direction(1, 0), Direction(-1, -1)};
    std::sort(ds.begin(), ds.end(), angle_less);
    CHECK(ds == std::vector<Direction>{Direction(1, 0), Direction(1, 1), Direction(-1, 0), Direction(-1, -1),
                                       Direction(0, -1)});
}

TEST_CASE("halfplane sides share the boundary line") {
    Halfplane h = hp(1, 1, q(1));
    Point on = pt(q(1, 3), q(2, 3));
    CHECK(h.plus_contains(on));
    CHECK(h.minus_contains(on));
    CHECK(h.on_boundary(on));
    CHECK(h.plus_contains(pt(0, 0)));
    CHECK_FALSE(h.minus_contains(pt(0, 0)));
    CHECK(h.flipped().plus_contains(pt(1, 1)));

    // Smaller offset, same normal: nested plus sides.
    Halfplane tighter = hp(1, 1, q(1, 2));
    for (const Point& p : {pt(0, 0), pt(q(1, 4), q(1, 4)), pt(-3, 2), pt(q(1, 2), 0)})
        if (tighter.plus_contains(p)) CHECK(h.plus_contains(p));
    CHECK(h.plus_contains(pt(q(3, 8), q(3, 8))));
    CHECK_FALSE(tighter.plus_contains(pt(q(3, 8), q(3, 8))));
}

TEST_CASE("line_intersect examples") {
    CHECK(line_intersect(hp(1, 0, q(0)), hp(0, 1, q(0))) == pt(0, 0));
    CHECK(line_intersect(hp(1, 1, q(1)), hp(0, 1, q(0))) == pt(1, 0));
    CHECK_FALSE(line_intersect(hp(0, 1, q(0)), hp(0, 1, q(1))).has_value());
    CHECK_FALSE(line_intersect(hp(0, 1, q(0)), hp(0, -1, q(1))).has_value());
}

TEST_CASE("triple_plus_empty examples") {
    CHECK(triple_plus_empty(x_at_least(1), y_at_least(1), hp(1, 1, q(1))));
    CHECK_FALSE(triple_plus_empty(x_at_least(0), y_at_least(0), hp(1, 1, q(1))));
    CHECK(triple_plus_empty(y_at_least(q(3, 5)), x_at_least(q(3, 5)), hp(1, 1, q(1))));
    // Plus sides meeting in exactly one point are not empty.
    CHECK_FALSE(triple_plus_empty(y_at_least(q(1, 2)), x_at_least(q(1, 2)), hp(1, 1, q(1))));
}

TEST_CASE("feasible examples") {
    std::vector<Halfplane> tri{x_at_least(0), y_at_least(0), hp(1, 1, q(1))};
    auto w = feasible(tri);
    REQUIRE(w.has_value());
    CHECK(contains(tri, *w));

    std::vector<Halfplane> clash{x_at_least(1), x_at_most(0)};
    CHECK_FALSE(feasible(clash).has_value());

    std::vector<Halfplane> derived{y_at_least(q(3, 5)), x_at_most(q(-3, 5)), hp(-1, 1, q(1))};
    CHECK_FALSE(feasible(derived).has_value());
    CHECK_FALSE(fm_feasible(derived));
}

TEST_CASE("canonical_witness examples") {
    std::vector<Halfplane> tri{x_at_least(0), y_at_least(0), hp(1, 1, q(1))};
    CHECK(canonical_witness(tri) == pt(0, 0));
    CHECK(canonical_witness(std::vector<Halfplane>{}) == pt(0, 0));
    std::vector<Halfplane> corner{x_at_least(q(1, 2)), y_at_least(q(1, 2)), hp(1, 1, q(2))};
    CHECK(canonical_witness(corner) == pt(q(1, 2), q(1, 2)));

    // Vertex-free regions.
    CHECK(canonical_witness(std::vector<Halfplane>{hp(1, 1, q(2))}) == pt(1, 1));
    CHECK(canonical_witness(std::vector<Halfplane>{hp(1, 2, q(-5))}) == pt(-1, -2));
    std::vector<Halfplane> strip{hp(0, 1, q(3)), hp(0, -1, q(-1))};  // 1 <= y <= 3
    CHECK(canonical_witness(strip) == pt(0, 3));
    std::vector<Halfplane> strip_rev{hp(0, -1, q(-1)), hp(0, 1, q(3))};
    CHECK(canonical_witness(strip_rev) == pt(0, 1));
    // Redundant parallel copies collapse to the tightest.
    std::vector<Halfplane> dup{hp(1, 0, q(5)), hp(1, 0, q(2))};
    CHECK(canonical_witness(dup) == pt(2, 0));

    std::vector<Halfplane> clash{x_at_least(1), x_at_most(0)};
    CHECK_THROWS_AS(canonical_witness(clash), EmptySystem);
}

TEST_CASE("contains examples") {
    std::vector<Halfplane> tri{y_at_least(0), x_at_least(0), hp(1, 1, q(1))};
    CHECK(contains(tri, pt(q(1, 2), q(1, 2))));
    CHECK_FALSE(contains(tri, pt(1, 1)));
    CHECK(contains(tri, pt(0, 0)));
}

TEST_CASE("property: line_intersect lies on both lines") {
    RandomSystems gen(11);
    for (int i = 0; i < 400; ++i) {
        Halfplane a = gen.halfplane(), b = gen.halfplane();
        auto p = line_intersect(a, b);
        CHECK(p.has_value() == !parallel(a.normal, b.normal));
        if (p) {
            CHECK(a.on_boundary(*p));
            CHECK(b.on_boundary(*p));
        }
    }
}

TEST_CASE("property: feasible agrees with Fourier-Motzkin and Helly") {
    RandomSystems gen(23);
    int feasible_count = 0;
    for (int i = 0; i < 400; ++i) {
        auto sys = gen.system(static_cast<std::size_t>(gen.integer(1, 8)));
        auto w = feasible(sys);
        CHECK(w.has_value() == fm_feasible(sys));
        if (w) {
            ++feasible_count;
            CHECK(contains(sys, *w));
            CHECK(canonical_witness(sys) == *w);
        } else {
            // Some triple (or pair) already fails.
            bool small_witness = false;
            for (std::size_t a = 0; a < sys.size() && !small_witness; ++a)
                for (std::size_t b = a; b < sys.size() && !small_witness; ++b)
                    for (std::size_t c = b; c < sys.size() && !small_witness; ++c)
                        small_witness = triple_plus_empty(sys[a], sys[b], sys[c]);
            CHECK(small_witness);
        }
    }
    CHECK(feasible_count > 50);
    CHECK(feasible_count < 350);
}

TEST_CASE("property: triple_plus_empty is symmetric") {
    RandomSystems gen(5);
    for (int i = 0; i < 300; ++i) {
        auto s = gen.system(3);
        bool base = triple_plus_empty(s[0], s[1], s[2]);
        std::array<int, 3> perm{0, 1, 2};
        while (std::next_permutation(perm.begin(), perm.end()))
            CHECK(triple_plus_empty(s[perm[0]], s[perm[1]], s[perm[2]]) == base);
    }
}

TEST_CASE("property: canonical witness is deterministic and a lexicographic minimum vertex") {
    RandomSystems gen(99);
    for (int i = 0; i < 200; ++i) {
        auto sys = gen.system(5);
        auto w = feasible(sys);
        if (!w) continue;
        CHECK(feasible(sys) == w);
        // Brute force: smallest feasible pairwise crossing.
        std::optional<Point> best;
        for (std::size_t a = 0; a < sys.size(); ++a)
            for (std::size_t b = a + 1; b < sys.size(); ++b)
                if (auto p = line_intersect(sys[a], sys[b]); p && contains(sys, *p) && (!best || *p < *best)) best = p;
        if (best) CHECK(*w == *best);
    }
}

}
