#ifndef PIERCING_TESTS_FIXTURES_HPP
#define PIERCING_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <utility>

#include "piercing/family.hpp"

namespace piercing::testing {

inline Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }
inline Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
inline Halfplane hp(long a, long b, Rational c) { return {Direction(a, b), std::move(c)}; }

inline RelatedPolygon member(std::initializer_list<std::pair<DirIndex, Rational>> offsets) {
    RelatedPolygon m;
    for (const auto& [j, c] : offsets) m.add(j, c);
    return m;
}

/// Unit triangle y >= 0, x >= 0, x + y <= 1.
inline Template unit_triangle() {
    return {{Direction(0, -1), Direction(-1, 0), Direction(1, 1)}, {q(0), q(0), q(1)}};
}

inline RelatedPolygon unit_translate(const Point& v) {
    RelatedPolygon base = member({{0, q(0)}, {1, q(0)}, {2, q(1)}});
    return base.translated(unit_triangle(), v);
}

/// Translates of the unit triangle by (0,0), (3/5,0), (0,3/5): pairwise
/// intersecting with empty total intersection.
inline Family three_translate() {
    return {unit_triangle(),
            {unit_translate(pt(0, 0)), unit_translate(pt(q(3, 5), 0)), unit_translate(pt(0, q(3, 5)))}};
}

/// Special-class triangle y >= 0, x <= 0, -x + y <= 1.
inline Template special_triangle() {
    return {{Direction(0, -1), Direction(1, 0), Direction(-1, 1)}, {q(0), q(0), q(1)}};
}

/// Translates of the special triangle by (0,0), (-3/5,0), (0,3/5).
inline Family special_three_translate() {
    const Template t = special_triangle();
    RelatedPolygon base = member({{0, q(0)}, {1, q(0)}, {2, q(1)}});
    return {t, {base, base.translated(t, pt(q(-3, 5), 0)), base.translated(t, pt(0, q(3, 5)))}};
}

} // namespace piercing::testing

#endif
