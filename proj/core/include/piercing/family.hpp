#ifndef PIERCING_FAMILY_HPP
#define PIERCING_FAMILY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piercing/geometry.hpp"

namespace piercing {

using DirIndex = std::size_t;
using MemberIndex = std::size_t;

/// The template polygon K: its edge normals and one concrete set of offsets.
/// Direction indices used everywhere else index into `normals`.
struct Template {
    std::vector<Direction> normals;
    std::vector<Rational> reference_offsets;

    std::size_t size() const { return normals.size(); }
    Halfplane halfplane(DirIndex j, const Rational& offset) const { return {normals.at(j), offset}; }
    std::vector<Halfplane> reference_halfplanes() const;

    friend bool operator==(const Template&, const Template&) = default;
};

/// Every violated Template invariant, one human-readable line each.
/// Empty iff the template is valid.
std::vector<std::string> validate_template(const Template& t);

/// One family member: an intersection of translates of some template
/// halfplanes, stored as direction index -> offset. Directions that are
/// absent impose no constraint.
struct RelatedPolygon {
    std::map<DirIndex, Rational> offsets;

    /// Adds a translate, keeping the tighter offset on duplicates.
    void add(DirIndex j, const Rational& offset);
    bool has(DirIndex j) const { return offsets.contains(j); }
    std::vector<Halfplane> halfplanes(const Template& t) const;
    /// Translate of this member by `v`.
    RelatedPolygon translated(const Template& t, const Point& v) const;

    friend bool operator==(const RelatedPolygon&, const RelatedPolygon&) = default;
};

bool member_contains(const Template& t, const RelatedPolygon& m, const Point& p);

struct Family {
    Template tmpl;
    std::vector<RelatedPolygon> members;

    std::size_t size() const { return members.size(); }
    /// Same template, only the listed members (in the given order).
    Family subfamily(const std::vector<MemberIndex>& which) const;

    friend bool operator==(const Family&, const Family&) = default;
};

/// Structural problems with the family: template violations, out-of-range
/// direction indices, empty members. Pairwise intersection is not checked here.
std::vector<std::string> validate_family(const Family& f);

/// Every pair (i, j), i < j, of members with empty closed intersection.
std::vector<std::pair<MemberIndex, MemberIndex>> pairwise_check(const Family& f);

/// Per-direction tightest translate over all members.
struct MinimalSystem {
    std::map<DirIndex, Halfplane> entries;
    /// Lowest member index attaining each entry's offset.
    std::map<DirIndex, MemberIndex> witness;

    std::vector<Halfplane> halfplanes() const;
    bool has(DirIndex j) const { return entries.contains(j); }
    const Halfplane& at(DirIndex j) const { return entries.at(j); }
};

MinimalSystem minimal_system(const Family& f);

/// A point common to all members, or nullopt when the total intersection is
/// empty. The point is canonical_witness of the minimal system.
std::optional<Point> family_intersection_witness(const Family& f);

} // namespace piercing

#endif
