#include "piercing/geometry.hpp"

#include <numeric>
#include <vector>

#include "piercing/errors.hpp"

namespace piercing {

std::string to_string(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

Point midpoint(const Point& a, const Point& b) {
    const Rational half(1, 2);
    return {(a.x + b.x) * half, (a.y + b.y) * half};
}

Direction::Direction(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw InvalidInput("direction (0, 0) is not a valid normal");
    std::int64_t g = std::gcd(a, b);
    a_ = a / g;
    b_ = b / g;
}

std::string to_string(const Direction& d) {
    return "(" + std::to_string(d.a()) + ", " + std::to_string(d.b()) + ")";
}

int cross_sign(const Direction& u, const Direction& v) {
    // 64-bit products can overflow for large components; go through BigInt.
    BigInt c = BigInt(static_cast<long>(u.a())) * BigInt(static_cast<long>(v.b()))
             - BigInt(static_cast<long>(u.b())) * BigInt(static_cast<long>(v.a()));
    return sgn(c);
}

bool parallel(const Direction& u, const Direction& v) { return cross_sign(u, v) == 0; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2*pi).
int half_of(const Direction& d) { return (d.b() > 0 || (d.b() == 0 && d.a() > 0)) ? 0 : 1; }

} // namespace

bool angle_less(const Direction& u, const Direction& v) {
    int hu = half_of(u), hv = half_of(v);
    if (hu != hv) return hu < hv;
    return cross_sign(u, v) > 0;
}

std::string to_string(const Halfplane& h) {
    return to_string(h.normal) + ".p <= " + h.offset.to_string();
}

Halfplane halfplane_through(const Direction& normal, const Point& p) { return {normal, normal.dot(p)}; }

std::optional<Point> line_intersect(const Halfplane& h1, const Halfplane& h2) {
    const Rational a1(static_cast<long>(h1.normal.a())), b1(static_cast<long>(h1.normal.b()));
    const Rational a2(static_cast<long>(h2.normal.a())), b2(static_cast<long>(h2.normal.b()));
    Rational det = a1 * b2 - a2 * b1;
    if (det.sign() == 0) return std::nullopt;
    return Point{(h1.offset * b2 - h2.offset * b1) / det, (a1 * h2.offset - a2 * h1.offset) / det};
}

Point foot_from_origin(const Halfplane& h) {
    const Rational a(static_cast<long>(h.normal.a())), b(static_cast<long>(h.normal.b()));
    Rational scale = h.offset / (a * a + b * b);
    return {a * scale, b * scale};
}

namespace {

// Keeps the tightest halfplane per normal, in order of first appearance.
std::vector<Halfplane> reduce_by_normal(std::span<const Halfplane> system) {
    std::vector<Halfplane> out;
    for (const auto& h : system) {
        bool merged = false;
        for (auto& o : out) {
            if (o.normal == h.normal) {
                if (h.offset < o.offset) o.offset = h.offset;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(h);
    }
    return out;
}

// All normals parallel to reduced[0]. Returns the canonical point or nullopt.
std::optional<Point> parallel_witness(const std::vector<Halfplane>& reduced) {
    if (reduced.size() == 1) return foot_from_origin(reduced[0]);
    // Two opposite normals d and -d after reduction.
    const Halfplane& first = reduced[0];
    const Halfplane& second = reduced[1];
    // first: d.p <= c1, second: -d.p <= c2  =>  -c2 <= d.p <= c1
    if (-second.offset > first.offset) return std::nullopt;
    return foot_from_origin(first);
}

} // namespace

std::optional<Point> feasible(std::span<const Halfplane> system) {
    if (system.empty()) return Point{0, 0};
    std::vector<Halfplane> reduced = reduce_by_normal(system);

    bool spanning = false;
    for (std::size_t i = 1; i < reduced.size() && !spanning; ++i)
        spanning = !parallel(reduced[0].normal, reduced[i].normal);
    if (!spanning) return parallel_witness(reduced);

    // The region contains no line, so when nonempty it has a vertex, and every
    // vertex is a feasible crossing of two boundary lines.
    std::optional<Point> best;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        for (std::size_t j = i + 1; j < reduced.size(); ++j) {
            auto p = line_intersect(reduced[i], reduced[j]);
            if (!p) continue;
            if (best && !(*p < *best)) continue;
            if (contains(reduced, *p)) best = std::move(p);
        }
    }
    return best;
}

Point canonical_witness(std::span<const Halfplane> system) {
    auto p = feasible(system);
    if (!p) throw EmptySystem("halfplane system has empty intersection");
    return *p;
}

bool contains(std::span<const Halfplane> member, const Point& p) {
    for (const auto& h : member)
        if (!h.plus_contains(p)) return false;
    return true;
}

bool triple_plus_empty(const Halfplane& h1, const Halfplane& h2, const Halfplane& h3) {
    const Halfplane sys[3] = {h1, h2, h3};
    return !feasible(sys).has_value();
}

} // namespace piercing
