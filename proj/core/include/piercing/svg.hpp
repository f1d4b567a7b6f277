#ifndef PIERCING_SVG_HPP
#define PIERCING_SVG_HPP

#include <string>
#include <vector>

#include "piercing/family.hpp"

namespace piercing {

/// SVG 1.1 drawing of a family: one translucent <polygon> per member
/// (unbounded members clipped to the viewport), dashed <line>s for the
/// minimal boundary lines, a <path> outline per empty triangle and a
/// <circle> plus label per piercing point. Output is a pure function of the
/// input; coordinates are printed with 9 significant digits.
std::string render_svg(const Family& f, const std::vector<Point>& points = {});

} // namespace piercing

#endif
