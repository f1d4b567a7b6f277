#include "piercing/empty_triangles.hpp"

#include "piercing/errors.hpp"

namespace piercing {

namespace {

std::string describe(const TriangleType& t) {
    return "(" + std::to_string(t.dirs[0]) + ", " + std::to_string(t.dirs[1]) + ", " + std::to_string(t.dirs[2]) + ")";
}

template <typename Fn>
void for_each_empty_triple(const MinimalSystem& ms, Fn&& fn) {
    std::vector<DirIndex> dirs;
    for (const auto& [j, h] : ms.entries) dirs.push_back(j);
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
            for (std::size_t c = b + 1; c < dirs.size(); ++c) {
                const Halfplane& ha = ms.at(dirs[a]);
                const Halfplane& hb = ms.at(dirs[b]);
                const Halfplane& hc = ms.at(dirs[c]);
                if (triple_plus_empty(ha, hb, hc)) fn(TriangleType{{dirs[a], dirs[b], dirs[c]}}, std::array{ha, hb, hc});
            }
}

} // namespace

EmptyTriangle make_empty_triangle(const TriangleType& type, const std::array<Halfplane, 3>& sides) {
    EmptyTriangle e{type, sides, {}, {}};
    for (std::size_t t = 0; t < 3; ++t) {
        auto v = line_intersect(sides[(t + 1) % 3], sides[(t + 2) % 3]);
        if (!v) throw DegenerateTriple("triple " + describe(type) + " has parallel sides");
        e.vertices[t] = *v;
    }
    for (std::size_t t = 0; t < 3; ++t) {
        // Positive area: the opposite vertex lies strictly off the side's line.
        if (sides[t].on_boundary(e.vertices[t]))
            throw DegenerateTriple("triple " + describe(type) + " has concurrent lines");
        e.midpoints[t] = midpoint(e.vertices[(t + 1) % 3], e.vertices[(t + 2) % 3]);
    }
    return e;
}

std::vector<EmptyTriangle> enumerate_empty_triangles(const MinimalSystem& ms) {
    std::vector<EmptyTriangle> out;
    for_each_empty_triple(ms, [&](const TriangleType& type, const std::array<Halfplane, 3>& sides) {
        out.push_back(make_empty_triangle(type, sides));
    });
    return out;
}

std::vector<TriangleType> empty_triangle_types(const MinimalSystem& ms) {
    std::vector<TriangleType> out;
    for_each_empty_triple(ms, [&](const TriangleType& type, const std::array<Halfplane, 3>&) { out.push_back(type); });
    return out;
}

MidpointStructure midpoint_structure(const EmptyTriangle& e) {
    auto medial = [&](std::size_t t) { return halfplane_through(e.sides[t].normal, e.midpoints[(t + 1) % 3]); };
    return {e.midpoints, {medial(0), medial(1), medial(2)}};
}

} // namespace piercing
