#ifndef PIERCING_PIERCING_T2_HPP
#define PIERCING_PIERCING_T2_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "piercing/piercing_result.hpp"

namespace piercing {

/// Template with a horizontal bottom edge (normal (0,-1)), a vertical right
/// edge (normal (1,0)) and all other edges of positive slope (normals
/// (-a, b) with a, b > 0; slope a/b).
struct SpecialForm {
    DirIndex h_index = 0;
    DirIndex v_index = 0;
    /// (direction index, slope), ascending by slope.
    std::vector<std::pair<DirIndex, Rational>> slopes;
};

std::optional<SpecialForm> classify_special(const Template& t);

/// Two-edges-outside test: at most one of the member's boundary lines with
/// direction in `dirs` meets the closed triangle `medial`. Directions the
/// member lacks are ignored.
bool teo_check(const Template& t, const RelatedPolygon& member, const std::array<Point, 3>& medial,
               const TriangleType& dirs);

/// Piercing for the special template class.
///
/// n = 3: the three midpoints of the single possible empty triangle, or one
/// common point when there is none.
/// n >= 4: repeatedly take the smallest-slope a_s forming an empty triangle
/// with h and v, emit its midpoints (plus the auxiliary point X when M_s
/// lies strictly below another minimal slope line), drop pierced members.
///
/// Throws NotSpecialClass for other templates and ClaimViolation when an
/// iteration fails to remove its triangle type or a TEO check fails.
PiercingResult pierce_t2(const Family& f);

} // namespace piercing

#endif
