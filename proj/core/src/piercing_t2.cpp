#include "piercing/piercing_t2.hpp"

#include <algorithm>

#include "piercing/errors.hpp"

namespace piercing {

std::optional<SpecialForm> classify_special(const Template& t) {
    std::optional<DirIndex> h, v;
    SpecialForm form;
    for (DirIndex j = 0; j < t.size(); ++j) {
        const Direction& d = t.normals[j];
        if (d == Direction(0, -1)) {
            if (h) return std::nullopt;
            h = j;
        } else if (d == Direction(1, 0)) {
            if (v) return std::nullopt;
            v = j;
        } else if (d.a() < 0 && d.b() > 0) {
            form.slopes.emplace_back(j, Rational(BigInt(static_cast<long>(-d.a())), BigInt(static_cast<long>(d.b()))));
        } else {
            return std::nullopt;
        }
    }
    if (!h || !v || form.slopes.empty()) return std::nullopt;
    form.h_index = *h;
    form.v_index = *v;
    std::sort(form.slopes.begin(), form.slopes.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
    return form;
}

namespace {

bool line_meets_triangle(const Halfplane& line, const std::array<Point, 3>& tri) {
    int below = 0, above = 0;
    for (const auto& p : tri) {
        int s = line.excess(p).sign();
        if (s < 0) ++below;
        if (s > 0) ++above;
    }
    return below < 3 && above < 3;
}

} // namespace

bool teo_check(const Template& t, const RelatedPolygon& member, const std::array<Point, 3>& medial,
               const TriangleType& dirs) {
    int meeting = 0;
    for (DirIndex j : dirs.dirs) {
        auto it = member.offsets.find(j);
        if (it == member.offsets.end()) continue;
        if (line_meets_triangle(t.halfplane(j, it->second), medial)) ++meeting;
    }
    return meeting <= 1;
}

namespace {

std::size_t emit_point(std::vector<Point>& points, const Point& p) {
    auto it = std::find(points.begin(), points.end(), p);
    if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
    points.push_back(p);
    return points.size() - 1;
}

TriangleType sorted_type(DirIndex a, DirIndex b, DirIndex c) {
    std::array<DirIndex, 3> d{a, b, c};
    std::sort(d.begin(), d.end());
    return TriangleType{d};
}

std::size_t slot_of(const TriangleType& type, DirIndex j) {
    return static_cast<std::size_t>(std::find(type.dirs.begin(), type.dirs.end(), j) - type.dirs.begin());
}

class T2Loop {
public:
    T2Loop(const Family& f, SpecialForm form) : family_(f), form_(std::move(form)) {
        result_.algorithm = "t2";
    }

    PiercingResult run() {
        const std::size_t n = family_.tmpl.size();
        auto types = empty_triangle_types(minimal_system(family_));
        result_.initial_type_count = types.size();
        result_.bound = n == 3 ? BigInt(3) : BigInt(static_cast<unsigned long>(4 * (n - 2)));

        std::vector<MemberIndex> remaining(family_.size());
        for (MemberIndex i = 0; i < remaining.size(); ++i) remaining[i] = i;

        if (n == 3)
            run_triangle(remaining);
        else
            run_loop(std::move(remaining));

        assign();
        return std::move(result_);
    }

private:
    // Members containing none of `pts`.
    std::vector<MemberIndex> unpierced(const std::vector<MemberIndex>& members, const std::vector<std::size_t>& pts) const {
        std::vector<MemberIndex> out;
        for (MemberIndex m : members) {
            bool hit = std::any_of(pts.begin(), pts.end(), [&](std::size_t p) {
                return member_contains(family_.tmpl, family_.members[m], result_.points[p]);
            });
            if (!hit) out.push_back(m);
        }
        return out;
    }

    void emit_witness(const std::vector<MemberIndex>& members, const MinimalSystem& ms) {
        auto w = feasible(ms.halfplanes());
        if (!w) throw ClaimViolation("t2.helly_leaf", "remaining members have no empty triangle but no common point");
        result_.final_witness = emit_point(result_.points, *w);
        (void)members;
    }

    std::optional<TriangleType> hv_type(const std::vector<TriangleType>& types, DirIndex slope) const {
        TriangleType want = sorted_type(form_.h_index, form_.v_index, slope);
        if (std::binary_search(types.begin(), types.end(), want)) return want;
        return std::nullopt;
    }

    void check_only_hv(const std::vector<TriangleType>& types) const {
        for (const auto& t : types)
            if (!t.contains(form_.h_index) || !t.contains(form_.v_index))
                throw ClaimViolation("t2.hv_triples", "empty triangle of type (" + std::to_string(t.dirs[0]) + ", " +
                                                          std::to_string(t.dirs[1]) + ", " +
                                                          std::to_string(t.dirs[2]) + ") does not use both h and v");
    }

    void run_triangle(const std::vector<MemberIndex>& members) {
        MinimalSystem ms = minimal_system(family_);
        auto types = empty_triangle_types(ms);
        if (types.empty()) {
            emit_witness(members, ms);
            return;
        }
        const DirIndex s = form_.slopes.front().first;
        TriangleType type = types.front();
        EmptyTriangle e = make_empty_triangle(type, {ms.at(type.dirs[0]), ms.at(type.dirs[1]), ms.at(type.dirs[2])});

        LoopStep step;
        step.remaining_before = members.size();
        step.slope_index = s;
        step.type = type;
        for (DirIndex j : {form_.h_index, form_.v_index, s})
            step.emitted.push_back(emit_point(result_.points, e.midpoints[slot_of(type, j)]));
        result_.loop.push_back(std::move(step));

        auto missed = unpierced(members, result_.loop.back().emitted);
        if (!missed.empty())
            throw ClaimViolation("t2.n3_midpoints",
                                 "member " + std::to_string(missed.front()) + " contains none of the three midpoints");
    }

    void run_loop(std::vector<MemberIndex> remaining) {
        const std::size_t max_iterations = family_.tmpl.size() - 2;
        while (!remaining.empty()) {
            MinimalSystem ms = minimal_system(family_.subfamily(remaining));
            auto types = empty_triangle_types(ms);
            check_only_hv(types);

            std::optional<std::pair<DirIndex, TriangleType>> pick;
            for (const auto& [j, slope] : form_.slopes) {
                if (auto t = hv_type(types, j)) {
                    pick.emplace(j, *t);
                    break;
                }
            }
            if (!pick) {
                emit_witness(remaining, ms);
                std::vector<std::size_t> w{*result_.final_witness};
                if (!unpierced(remaining, w).empty())
                    throw ClaimViolation("t2.helly_leaf", "common point misses a remaining member");
                return;
            }
            if (result_.loop.size() == max_iterations)
                throw ClaimViolation("t2.progress", "more than n-2 iterations needed");

            auto [s, type] = *pick;
            step(remaining, ms, s, type);

            auto next = unpierced(remaining, result_.loop.back().emitted);
            auto next_types = empty_triangle_types(minimal_system(family_.subfamily(next)));
            if (!next.empty() && std::binary_search(next_types.begin(), next_types.end(), type))
                throw ClaimViolation("t2.type_eliminated",
                                     "slope direction " + std::to_string(s) + " still forms an empty triangle with h and v "
                                     "after removing pierced members");
            remaining = std::move(next);
        }
    }

    void step(const std::vector<MemberIndex>& remaining, const MinimalSystem& ms, DirIndex s, const TriangleType& type) {
        const DirIndex h = form_.h_index, v = form_.v_index;
        EmptyTriangle e = make_empty_triangle(type, {ms.at(type.dirs[0]), ms.at(type.dirs[1]), ms.at(type.dirs[2])});
        const Point m_h = e.midpoints[slot_of(type, h)];
        const Point m_v = e.midpoints[slot_of(type, v)];
        const Point m_s = e.midpoints[slot_of(type, s)];

        for (MemberIndex m : remaining)
            if (!teo_check(family_.tmpl, family_.members[m], e.midpoints, type))
                throw ClaimViolation("t2.teo", "member " + std::to_string(m) +
                                                   " has two boundary lines meeting the midpoint triangle");

        LoopStep st;
        st.remaining_before = remaining.size();
        st.slope_index = s;
        st.type = type;
        for (const auto& [j, slope] : form_.slopes) {
            if (j == s || !ms.has(j)) continue;
            if (ms.at(j).excess(m_s).sign() > 0) st.below_lines.push_back(j);
        }
        std::sort(st.below_lines.begin(), st.below_lines.end());

        for (const Point& p : {m_h, m_v, m_s}) st.emitted.push_back(emit_point(result_.points, p));

        if (!st.below_lines.empty()) {
            st.case_number = 2;
            st.construction = build_case2(ms, s, m_s, st.below_lines);
            st.emitted.push_back(emit_point(result_.points, st.construction->X));
        }
        result_.loop.push_back(std::move(st));
    }

    Case2Construction build_case2(const MinimalSystem& ms, DirIndex s, const Point& m_s,
                                  const std::vector<DirIndex>& below) const {
        const Halfplane& a_s = ms.at(s);
        const Point H = *line_intersect(a_s, ms.at(form_.v_index));
        const Halfplane h_s = halfplane_through(Direction(0, -1), H);
        const Halfplane v_s = halfplane_through(Direction(1, 0), m_s);
        const Point P = *line_intersect(v_s, h_s);

        // Leftmost crossing with h_s, ties to the lower direction index.
        std::optional<std::pair<DirIndex, Point>> chosen;
        for (DirIndex i : below) {
            Point p_i = *line_intersect(ms.at(i), h_s);
            if (!chosen || p_i.x < chosen->second.x) chosen.emplace(i, p_i);
        }
        const auto& [i, P_i] = *chosen;

        Point X, Y;
        if (P_i.x > P.x) {
            Y = P;
            X = m_s;
        } else {
            Y = P_i;
            X = *line_intersect(halfplane_through(Direction(1, 0), P_i), a_s);
        }
        return Case2Construction{H, h_s, v_s, P, i, P_i, X, Y, {H, X, Y}};
    }

    void assign() {
        result_.assignment.assign(family_.size(), 0);
        for (MemberIndex m = 0; m < family_.size(); ++m) {
            bool found = false;
            for (std::size_t p = 0; p < result_.points.size() && !found; ++p) {
                if (member_contains(family_.tmpl, family_.members[m], result_.points[p])) {
                    result_.assignment[m] = p;
                    found = true;
                }
            }
            if (!found) throw ClaimViolation("t2.soundness", "member " + std::to_string(m) + " is not pierced");
        }
    }

    const Family& family_;
    SpecialForm form_;
    PiercingResult result_;
};

} // namespace

PiercingResult pierce_t2(const Family& f) {
    auto form = classify_special(f.tmpl);
    if (!form) throw NotSpecialClass("template is not of the horizontal/vertical/positive-slope class");
    return T2Loop(f, std::move(*form)).run();
}

} // namespace piercing
