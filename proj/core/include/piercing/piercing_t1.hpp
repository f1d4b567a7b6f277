#ifndef PIERCING_PIERCING_T1_HPP
#define PIERCING_PIERCING_T1_HPP

#include <array>
#include <vector>

#include "piercing/piercing_result.hpp"

namespace piercing {

/// p lies in every plus side of `member` whose direction belongs to `type`.
/// Vacuously true when the member uses none of those directions.
bool restricted_hull_contains(const Template& t, const RelatedPolygon& member, const TriangleType& type,
                              const Point& p);

/// Splits the family by the first midpoint (in slot order) that each
/// member's restricted hull contains. Returned indices refer to `f`.
/// Throws ClaimViolation("t1.midpoint_partition") when a member's restricted
/// hull contains none of the three midpoints.
std::array<std::vector<MemberIndex>, 3> partition_by_midpoints(const Family& f, const EmptyTriangle& e);

/// Recursive midpoint-partition piercing. Emits at most 3^N points where N
/// is the number of empty triangles of the whole family. Every member is
/// checked to contain its assigned point before returning.
///
/// Preconditions: validate_family(f) and pairwise_check(f) are empty.
/// Throws ClaimViolation when a step fails to deliver its guarantee.
PiercingResult pierce_t1(const Family& f);

} // namespace piercing

#endif
