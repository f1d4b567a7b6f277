#ifndef PIERCING_EMPTY_TRIANGLES_HPP
#define PIERCING_EMPTY_TRIANGLES_HPP

#include <array>
#include <compare>
#include <vector>

#include "piercing/family.hpp"

namespace piercing {

/// Ordered direction triple i < j < k.
struct TriangleType {
    std::array<DirIndex, 3> dirs;

    bool contains(DirIndex j) const { return dirs[0] == j || dirs[1] == j || dirs[2] == j; }
    friend auto operator<=>(const TriangleType&, const TriangleType&) = default;
};

/// Negative triangle T = e_1^- n e_2^- n e_3^- of three minimal halfplanes
/// whose plus sides share no point.
///
/// Slot t refers to the side with direction dirs[t]:
///   vertices[t]  is the vertex opposite that side,
///   midpoints[t] is the midpoint of the edge lying on that side's line.
struct EmptyTriangle {
    TriangleType type;
    std::array<Halfplane, 3> sides;
    std::array<Point, 3> vertices;
    std::array<Point, 3> midpoints;
};

/// Medial triangle of an empty triangle. medial_sides[t] is parallel to
/// sides[t], passes through the two midpoints other than midpoints[t], and
/// keeps the same outward normal; the intersection of their plus sides is
/// the triangle M_1 M_2 M_3.
struct MidpointStructure {
    std::array<Point, 3> midpoints;
    std::array<Halfplane, 3> medial_sides;
};

/// Builds the triangle for one triple. Throws DegenerateTriple when the
/// plus sides are disjoint but some two of the lines are parallel.
EmptyTriangle make_empty_triangle(const TriangleType& type, const std::array<Halfplane, 3>& sides);

/// All empty triangles of the system, sorted by direction triple.
std::vector<EmptyTriangle> enumerate_empty_triangles(const MinimalSystem& ms);

/// Just the types, cheaper when the geometry is not needed.
std::vector<TriangleType> empty_triangle_types(const MinimalSystem& ms);

MidpointStructure midpoint_structure(const EmptyTriangle& e);

} // namespace piercing

#endif
