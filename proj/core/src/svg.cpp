#include "piercing/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "piercing/empty_triangles.hpp"

namespace piercing {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Box {
    Rational min_x, min_y, max_x, max_y;

    std::vector<Halfplane> halfplanes() const {
        return {{Direction(-1, 0), -min_x}, {Direction(1, 0), max_x}, {Direction(0, -1), -min_y}, {Direction(0, 1), max_y}};
    }
};

// Feasible crossings of the system, i.e. the vertices of a bounded region.
std::vector<Point> region_vertices(const std::vector<Halfplane>& hs) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (auto p = line_intersect(hs[i], hs[j]); p && contains(hs, *p)) out.push_back(*p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Counterclockwise order around the vertex centroid, exact.
void sort_ccw(std::vector<Point>& pts) {
    if (pts.size() < 3) return;
    Rational cx(0), cy(0);
    for (const auto& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    const Rational k(static_cast<long>(pts.size()));
    cx /= k;
    cy /= k;
    auto half = [&](const Point& p) {
        Rational dx = p.x - cx, dy = p.y - cy;
        return (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cross = (a.x - cx) * (b.y - cy) - (a.y - cy) * (b.x - cx);
        return cross.sign() > 0;
    });
}

class Canvas {
public:
    explicit Canvas(const Box& box) : box_(box) {
        double w = (box.max_x - box.min_x).to_double();
        double h = (box.max_y - box.min_y).to_double();
        scale_ = (kCanvas - 2 * kMargin) / std::max(w, h);
        width_ = w * scale_ + 2 * kMargin;
        height_ = h * scale_ + 2 * kMargin;
    }

    double x(const Point& p) const { return (p.x - box_.min_x).to_double() * scale_ + kMargin; }
    double y(const Point& p) const { return (box_.max_y - p.y).to_double() * scale_ + kMargin; }
    std::string xy(const Point& p) const { return num(x(p)) + "," + num(y(p)); }
    double width() const { return width_; }
    double height() const { return height_; }

private:
    Box box_;
    double scale_ = 1;
    double width_ = kCanvas;
    double height_ = kCanvas;
};

Box viewport(const Family& f, const std::vector<Point>& extra) {
    std::vector<Point> anchors = extra;
    for (const auto& m : f.members) {
        auto hs = m.halfplanes(f.tmpl);
        auto vs = region_vertices(hs);
        anchors.insert(anchors.end(), vs.begin(), vs.end());
        if (auto w = feasible(hs)) anchors.push_back(*w);
    }
    if (anchors.empty()) anchors.push_back({0, 0});

    Box b{anchors[0].x, anchors[0].y, anchors[0].x, anchors[0].y};
    for (const auto& p : anchors) {
        b.min_x = min(b.min_x, p.x);
        b.max_x = max(b.max_x, p.x);
        b.min_y = min(b.min_y, p.y);
        b.max_y = max(b.max_y, p.y);
    }
    Rational extent = max(b.max_x - b.min_x, b.max_y - b.min_y);
    Rational pad = extent.sign() == 0 ? Rational(1) : extent * Rational(1, 4);
    b.min_x -= pad;
    b.min_y -= pad;
    b.max_x += pad;
    b.max_y += pad;
    return b;
}

} // namespace

std::string render_svg(const Family& f, const std::vector<Point>& points) {
    MinimalSystem ms = minimal_system(f);
    std::vector<EmptyTriangle> triangles;
    try {
        triangles = enumerate_empty_triangles(ms);
    } catch (const std::exception&) {
        // Not pairwise intersecting; draw what is there.
    }

    std::vector<Point> extra = points;
    for (const auto& t : triangles) extra.insert(extra.end(), t.vertices.begin(), t.vertices.end());
    const Box box = viewport(f, extra);
    const Canvas canvas(box);
    const auto box_hs = box.halfplanes();

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(canvas.width()) << "\" height=\""
        << num(canvas.height()) << "\" viewBox=\"0 0 " << num(canvas.width()) << " " << num(canvas.height()) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(canvas.width()) << "\" height=\"" << num(canvas.height())
        << "\" fill=\"white\"/>\n";

    svg << "<g id=\"members\">\n";
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        auto hs = f.members[i].halfplanes(f.tmpl);
        hs.insert(hs.end(), box_hs.begin(), box_hs.end());
        auto vs = region_vertices(hs);
        sort_ccw(vs);
        const char* color = kPalette[i % std::size(kPalette)];
        svg << "<polygon data-member=\"" << i << "\" fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"" << color
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t k = 0; k < vs.size(); ++k) svg << (k ? " " : "") << canvas.xy(vs[k]);
        svg << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g id=\"minimal-lines\" stroke=\"black\" stroke-width=\"0.8\" stroke-dasharray=\"6,4\">\n";
    for (const auto& [j, h] : ms.entries) {
        std::vector<Point> ends;
        for (const auto& side : box_hs)
            if (auto p = line_intersect(h, side); p && contains(box_hs, *p)) ends.push_back(*p);
        if (ends.size() < 2) continue;
        auto [lo, hi] = std::minmax_element(ends.begin(), ends.end());
        svg << "<line data-direction=\"" << j << "\" x1=\"" << num(canvas.x(*lo)) << "\" y1=\"" << num(canvas.y(*lo))
            << "\" x2=\"" << num(canvas.x(*hi)) << "\" y2=\"" << num(canvas.y(*hi)) << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g id=\"empty-triangles\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\">\n";
    for (const auto& t : triangles) {
        svg << "<path data-type=\"" << t.type.dirs[0] << "," << t.type.dirs[1] << "," << t.type.dirs[2] << "\" d=\"M "
            << canvas.xy(t.vertices[0]) << " L " << canvas.xy(t.vertices[1]) << " L " << canvas.xy(t.vertices[2])
            << " Z\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g id=\"points\">\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        svg << "<circle data-point=\"" << i << "\" cx=\"" << num(canvas.x(points[i])) << "\" cy=\""
            << num(canvas.y(points[i])) << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "<text x=\"" << num(canvas.x(points[i]) + 6) << "\" y=\"" << num(canvas.y(points[i]) - 6)
            << "\" font-size=\"12\" font-family=\"sans-serif\">P" << i << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace piercing
