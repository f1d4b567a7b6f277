#ifndef PIERCING_GEOMETRY_HPP
#define PIERCING_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "piercing/rational.hpp"

namespace piercing {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic: x first, then y.
    friend auto operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

std::string to_string(const Point& p);
Point midpoint(const Point& a, const Point& b);

/// Primitive integer normal vector. Two directions are equal iff they point
/// the same way.
class Direction {
public:
    /// Reduces (a, b) to primitive form. Throws InvalidInput for (0, 0).
    Direction(std::int64_t a, std::int64_t b);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

    Rational dot(const Point& p) const { return Rational(a_) * p.x + Rational(b_) * p.y; }
    Direction opposite() const { return Direction(-a_, -b_); }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    std::int64_t a_;
    std::int64_t b_;
};

std::string to_string(const Direction& d);

/// Sign of the cross product u x v.
int cross_sign(const Direction& u, const Direction& v);
bool parallel(const Direction& u, const Direction& v);

/// Strict angular order on [0, 2*pi) measured from the positive x-axis.
bool angle_less(const Direction& u, const Direction& v);

/// Closed halfplane. Plus side {p : normal . p <= offset}, minus side
/// {p : normal . p >= offset}; they share the boundary line.
struct Halfplane {
    Direction normal;
    Rational offset;

    bool plus_contains(const Point& p) const { return normal.dot(p) <= offset; }
    bool minus_contains(const Point& p) const { return normal.dot(p) >= offset; }
    bool on_boundary(const Point& p) const { return normal.dot(p) == offset; }
    /// Signed slack: negative strictly inside the plus side, zero on the line.
    Rational excess(const Point& p) const { return normal.dot(p) - offset; }

    /// Same line, sides swapped.
    Halfplane flipped() const { return {normal.opposite(), -offset}; }

    friend bool operator==(const Halfplane&, const Halfplane&) = default;
};

std::string to_string(const Halfplane& h);

/// Halfplane through `p` with the given outward normal.
Halfplane halfplane_through(const Direction& normal, const Point& p);

/// Unique common point of the two boundary lines; nullopt when parallel.
std::optional<Point> line_intersect(const Halfplane& h1, const Halfplane& h2);

/// Point of the boundary line closest to the origin.
Point foot_from_origin(const Halfplane& h);

/// True iff the three plus sides have empty common intersection.
bool triple_plus_empty(const Halfplane& h1, const Halfplane& h2, const Halfplane& h3);

/// A point of the intersection of all plus sides, or nullopt when empty.
/// Returns canonical_witness whenever the system is feasible.
std::optional<Point> feasible(std::span<const Halfplane> system);

/// Deterministic point of the intersection of all plus sides:
///  - lexicographically smallest vertex when the region has one;
///  - no constraints: the origin;
///  - only one binding direction: foot of the perpendicular from the origin
///    onto the tightest boundary;
///  - a strip: foot of the perpendicular onto the binding line that appears
///    first in `system`.
/// Throws EmptySystem when the intersection is empty.
Point canonical_witness(std::span<const Halfplane> system);

bool contains(std::span<const Halfplane> member, const Point& p);

} // namespace piercing

#endif
