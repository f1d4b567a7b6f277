#include "piercing/piercing_t1.hpp"

#include <algorithm>

#include "piercing/errors.hpp"

namespace piercing {

bool restricted_hull_contains(const Template& t, const RelatedPolygon& member, const TriangleType& type,
                              const Point& p) {
    for (DirIndex j : type.dirs) {
        auto it = member.offsets.find(j);
        if (it != member.offsets.end() && t.normals[j].dot(p) > it->second) return false;
    }
    return true;
}

std::array<std::vector<MemberIndex>, 3> partition_by_midpoints(const Family& f, const EmptyTriangle& e) {
    std::array<std::vector<MemberIndex>, 3> buckets;
    for (MemberIndex i = 0; i < f.size(); ++i) {
        bool placed = false;
        for (std::size_t t = 0; t < 3 && !placed; ++t) {
            if (restricted_hull_contains(f.tmpl, f.members[i], e.type, e.midpoints[t])) {
                buckets[t].push_back(i);
                placed = true;
            }
        }
        if (!placed)
            throw ClaimViolation("t1.midpoint_partition",
                                 "member " + std::to_string(i) + " restricted to directions (" +
                                     std::to_string(e.type.dirs[0]) + ", " + std::to_string(e.type.dirs[1]) + ", " +
                                     std::to_string(e.type.dirs[2]) + ") contains none of the midpoints");
    }
    return buckets;
}

namespace {

std::size_t emit_point(std::vector<Point>& points, const Point& p) {
    auto it = std::find(points.begin(), points.end(), p);
    if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
    points.push_back(p);
    return points.size() - 1;
}

std::string list_members(const std::vector<MemberIndex>& ms) {
    std::string s = "[";
    for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + std::to_string(ms[i]);
    return s + "]";
}

class T1Recursion {
public:
    explicit T1Recursion(const Family& f) : family_(f) {
        result_.algorithm = "t1";
        result_.assignment.assign(f.size(), 0);
    }

    PiercingResult run() {
        std::vector<MemberIndex> all(family_.size());
        for (MemberIndex i = 0; i < all.size(); ++i) all[i] = i;
        auto types = empty_triangle_types(minimal_system(family_));
        result_.initial_type_count = types.size();
        result_.bound = pow3(types.size());
        visit(all, types, 0);

        for (MemberIndex i = 0; i < family_.size(); ++i) {
            if (!member_contains(family_.tmpl, family_.members[i], result_.points[result_.assignment[i]]))
                throw ClaimViolation("t1.soundness", "member " + std::to_string(i) + " misses its assigned point");
        }
        return std::move(result_);
    }

private:
    std::size_t visit(const std::vector<MemberIndex>& members, const std::vector<TriangleType>& types,
                      std::size_t depth) {
        std::size_t node_index = result_.recursion.size();
        result_.recursion.push_back(RecursionNode{depth, members, std::nullopt, {}, {}, std::nullopt});

        Family sub = family_.subfamily(members);
        MinimalSystem ms = minimal_system(sub);

        if (types.empty()) {
            auto w = feasible(ms.halfplanes());
            if (!w)
                throw ClaimViolation("t1.helly_leaf", "subfamily " + list_members(members) +
                                                          " has no empty triangle but an empty intersection");
            std::size_t idx = emit_point(result_.points, *w);
            result_.recursion[node_index].witness = idx;
            for (MemberIndex m : members) result_.assignment[m] = idx;
            return node_index;
        }

        // Types come sorted, so the first is the lexicographically smallest triple.
        const TriangleType chosen = types.front();
        auto side = [&](std::size_t t) { return ms.at(chosen.dirs[t]); };
        EmptyTriangle e = make_empty_triangle(chosen, {side(0), side(1), side(2)});
        auto local_buckets = partition_by_midpoints(sub, e);

        result_.recursion[node_index].chosen = chosen;
        for (std::size_t t = 0; t < 3; ++t) result_.recursion[node_index].bucket_sizes[t] = local_buckets[t].size();

        for (std::size_t t = 0; t < 3; ++t) {
            if (local_buckets[t].empty()) continue;
            std::vector<MemberIndex> bucket;
            bucket.reserve(local_buckets[t].size());
            for (MemberIndex local : local_buckets[t]) bucket.push_back(members[local]);

            auto child_types = empty_triangle_types(minimal_system(family_.subfamily(bucket)));
            if (std::binary_search(child_types.begin(), child_types.end(), chosen))
                throw ClaimViolation("t1.type_eliminated",
                                     "bucket " + std::to_string(t + 1) + " " + list_members(bucket) +
                                         " still has an empty triangle of the chosen type");
            if (!std::includes(types.begin(), types.end(), child_types.begin(), child_types.end()))
                throw ClaimViolation("t1.progress", "bucket " + list_members(bucket) +
                                                        " has an empty triangle its parent lacks");

            std::size_t child = visit(bucket, child_types, depth + 1);
            result_.recursion[node_index].children.push_back(child);
        }
        return node_index;
    }

    const Family& family_;
    PiercingResult result_;
};

} // namespace

PiercingResult pierce_t1(const Family& f) { return T1Recursion(f).run(); }

} // namespace piercing
