#include "piercing/family.hpp"

#include <algorithm>
#include <numeric>

namespace piercing {

std::vector<Halfplane> Template::reference_halfplanes() const {
    std::vector<Halfplane> out;
    for (std::size_t j = 0; j < normals.size() && j < reference_offsets.size(); ++j)
        out.push_back({normals[j], reference_offsets[j]});
    return out;
}

namespace {

// Parameter interval [lo, hi] of the segment of line `i` kept by all other
// halfplanes. Unset ends are unbounded. `empty` when the constraints clash.
struct EdgeSpan {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool empty = false;
};

EdgeSpan edge_span(const std::vector<Halfplane>& hs, std::size_t i) {
    const Halfplane& line = hs[i];
    Point base = foot_from_origin(line);
    // Along-line direction (-b, a).
    const Rational dx(static_cast<long>(-line.normal.b())), dy(static_cast<long>(line.normal.a()));
    EdgeSpan span;
    for (std::size_t j = 0; j < hs.size(); ++j) {
        if (j == i) continue;
        const Halfplane& h = hs[j];
        Rational rate = Rational(static_cast<long>(h.normal.a())) * dx + Rational(static_cast<long>(h.normal.b())) * dy;
        Rational slack = h.offset - h.normal.dot(base);
        // constraint: rate * t <= slack
        if (rate.sign() == 0) {
            if (slack.sign() < 0) span.empty = true;
        } else if (rate.sign() > 0) {
            Rational bound = slack / rate;
            if (!span.hi || bound < *span.hi) span.hi = bound;
        } else {
            Rational bound = slack / rate;
            if (!span.lo || bound > *span.lo) span.lo = bound;
        }
    }
    if (span.lo && span.hi && *span.lo > *span.hi) span.empty = true;
    return span;
}

} // namespace

std::vector<std::string> validate_template(const Template& t) {
    std::vector<std::string> report;
    const std::size_t n = t.normals.size();
    if (n < 3) report.push_back("n >= 3 required, got " + std::to_string(n));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.normals[i] == t.normals[j])
                report.push_back("directions " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    if (n >= 2) {
        std::vector<Direction> sorted = t.normals;
        std::sort(sorted.begin(), sorted.end(), angle_less);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const Direction& u = sorted[i];
            const Direction& v = sorted[(i + 1) % sorted.size()];
            if (u == v) continue;
            // Cyclic successor strictly within a half-turn.
            if (cross_sign(u, v) <= 0) {
                report.push_back("angular gap < pi violated between " + to_string(u) + " and " + to_string(v));
                break;
            }
        }
    }

    if (t.reference_offsets.size() != n) {
        report.push_back("reference_offsets has " + std::to_string(t.reference_offsets.size()) +
                         " entries, expected " + std::to_string(n));
    } else if (report.empty()) {
        auto hs = t.reference_halfplanes();
        for (std::size_t i = 0; i < n; ++i) {
            EdgeSpan span = edge_span(hs, i);
            bool positive = !span.empty && (!span.lo || !span.hi || *span.lo < *span.hi);
            if (!positive)
                report.push_back("halfplane " + std::to_string(i) + " does not support an edge of positive length");
        }
    }
    return report;
}

void RelatedPolygon::add(DirIndex j, const Rational& offset) {
    auto [it, inserted] = offsets.try_emplace(j, offset);
    if (!inserted && offset < it->second) it->second = offset;
}

std::vector<Halfplane> RelatedPolygon::halfplanes(const Template& t) const {
    std::vector<Halfplane> out;
    out.reserve(offsets.size());
    for (const auto& [j, c] : offsets) out.push_back(t.halfplane(j, c));
    return out;
}

RelatedPolygon RelatedPolygon::translated(const Template& t, const Point& v) const {
    RelatedPolygon out;
    for (const auto& [j, c] : offsets) out.offsets.emplace(j, c + t.normals.at(j).dot(v));
    return out;
}

bool member_contains(const Template& t, const RelatedPolygon& m, const Point& p) {
    for (const auto& [j, c] : m.offsets)
        if (t.normals[j].dot(p) > c) return false;
    return true;
}

Family Family::subfamily(const std::vector<MemberIndex>& which) const {
    Family out{tmpl, {}};
    out.members.reserve(which.size());
    for (MemberIndex i : which) out.members.push_back(members.at(i));
    return out;
}

std::vector<std::string> validate_family(const Family& f) {
    std::vector<std::string> report = validate_template(f.tmpl);
    if (f.members.empty()) report.push_back("family has no members");
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto& m = f.members[i];
        if (m.offsets.empty()) {
            report.push_back("member " + std::to_string(i) + " has no halfplanes");
            continue;
        }
        bool in_range = true;
        for (const auto& [j, c] : m.offsets) {
            if (j >= f.tmpl.size()) {
                report.push_back("member " + std::to_string(i) + " uses direction index " + std::to_string(j) +
                                 " outside the template");
                in_range = false;
            }
        }
        if (in_range && !feasible(m.halfplanes(f.tmpl)))
            report.push_back("member " + std::to_string(i) + " is empty");
    }
    return report;
}

std::vector<std::pair<MemberIndex, MemberIndex>> pairwise_check(const Family& f) {
    std::vector<std::vector<Halfplane>> hs;
    hs.reserve(f.members.size());
    for (const auto& m : f.members) hs.push_back(m.halfplanes(f.tmpl));

    std::vector<std::pair<MemberIndex, MemberIndex>> disjoint;
    std::vector<Halfplane> joint;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            joint = hs[i];
            joint.insert(joint.end(), hs[j].begin(), hs[j].end());
            if (!feasible(joint)) disjoint.emplace_back(i, j);
        }
    }
    return disjoint;
}

std::vector<Halfplane> MinimalSystem::halfplanes() const {
    std::vector<Halfplane> out;
    out.reserve(entries.size());
    for (const auto& [j, h] : entries) out.push_back(h);
    return out;
}

MinimalSystem minimal_system(const Family& f) {
    MinimalSystem ms;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        for (const auto& [j, c] : f.members[i].offsets) {
            auto it = ms.entries.find(j);
            if (it == ms.entries.end()) {
                ms.entries.emplace(j, f.tmpl.halfplane(j, c));
                ms.witness.emplace(j, i);
            } else if (c < it->second.offset) {
                it->second.offset = c;
                ms.witness[j] = i;
            }
        }
    }
    return ms;
}

std::optional<Point> family_intersection_witness(const Family& f) {
    return feasible(minimal_system(f).halfplanes());
}

} // namespace piercing
