#ifndef PIERCING_PIERCING_RESULT_HPP
#define PIERCING_PIERCING_RESULT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "piercing/empty_triangles.hpp"

namespace piercing {

/// One node of the midpoint-partition recursion.
struct RecursionNode {
    std::size_t depth = 0;
    std::vector<MemberIndex> members;             // indices into the input family
    std::optional<TriangleType> chosen;           // unset at leaves
    std::array<std::size_t, 3> bucket_sizes{};
    std::vector<std::size_t> children;            // indices into PiercingResult::recursion
    std::optional<std::size_t> witness;           // leaf point index
};

/// Auxiliary triangle H X Y built when the slope midpoint lies strictly
/// below some other minimal slope line.
struct Case2Construction {
    Point H;                 // a_s n v on the minimal lines
    Halfplane h_s;           // horizontal through H
    Halfplane v_s;           // vertical through M_s
    Point P;                 // v_s n h_s
    DirIndex chosen_i;
    Point P_i;               // a_i n h_s
    Point X;
    Point Y;
    std::array<Point, 3> T_i_vertices;  // H, X, Y
};

/// One iteration of the slope-elimination loop.
struct LoopStep {
    std::size_t remaining_before = 0;
    DirIndex slope_index = 0;
    TriangleType type;
    int case_number = 1;                        // 1 or 2
    std::vector<DirIndex> below_lines;          // slope directions whose minimal line passes strictly below M_s
    std::vector<std::size_t> emitted;           // point indices
    std::optional<Case2Construction> construction;
};

struct PiercingResult {
    std::string algorithm;                      // "t1" or "t2"
    std::vector<Point> points;
    std::vector<std::size_t> assignment;        // member -> point index inside it
    std::size_t initial_type_count = 0;         // empty triangles of the whole family
    BigInt bound;
    std::vector<RecursionNode> recursion;       // t1 only
    std::vector<LoopStep> loop;                 // t2 only
    std::optional<std::size_t> final_witness;   // t2: point emitted after the loop
};

/// 3^exponent as an exact integer.
BigInt pow3(std::size_t exponent);
BigInt binomial(std::size_t n, std::size_t k);

} // namespace piercing

#endif
