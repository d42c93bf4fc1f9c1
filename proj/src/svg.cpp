#include "l1db/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "l1db/geometry.hpp"

namespace l1db {
namespace {

std::string num(double v, const char* spec) {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Mapper {
    double minx, maxy, margin;
    double px(double x) const { return x - minx + margin; }
    double py(double y) const { return maxy + margin - y; }
};

void append_polygon(std::ostringstream& os, const RectilinearPolygon& poly,
                    const Mapper& m, const char* fill, double stroke_w) {
    os << "  <polygon points=\"";
    bool first = true;
    for (const Point& p : poly.vertices()) {
        if (!first) os << " ";
        first = false;
        os << num(m.px(p.x), "%.9g") << "," << num(m.py(p.y), "%.9g");
    }
    os << "\" fill=\"" << fill << "\" fill-opacity=\"0.85\" stroke=\"#1d3557\""
       << " stroke-width=\"" << num(stroke_w, "%.9g") << "\"/>\n";
}

void append_labels(std::ostringstream& os, const RectilinearPolygon& poly,
                   const Mapper& m, double font) {
    const std::vector<Point>& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        const double len = std::abs(q.x - p.x) + std::abs(q.y - p.y);
        if (len <= kEps) continue;
        const double mx = m.px((p.x + q.x) / 2.0);
        const double my = m.py((p.y + q.y) / 2.0);
        os << "  <text x=\"" << num(mx, "%.9g") << "\" y=\"" << num(my, "%.9g")
           << "\" font-size=\"" << num(font, "%.9g")
           << "\" font-family=\"sans-serif\" text-anchor=\"middle\""
           << " dominant-baseline=\"middle\" fill=\"#1d3557\">"
           << num(len, "%.6g") << "</text>\n";
    }
}

} // namespace

std::string render_svg(const FamilyConfig& cfg) {
    const BubblePair pair = realize(cfg);
    BoundingBox box = bounding_box(pair.first());
    const BoundingBox second = bounding_box(pair.second());
    box.left = std::min(box.left, second.left);
    box.right = std::max(box.right, second.right);
    box.bottom = std::min(box.bottom, second.bottom);
    box.top = std::max(box.top, second.top);

    const double span = std::max(box.width(), box.height());
    const double margin = 0.1 * span;
    const double width = box.width() + 2.0 * margin;
    const double height = box.height() + 2.0 * margin;
    const Mapper m{box.left, box.top, margin};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
       << num(width, "%.9g") << " " << num(height, "%.9g") << "\">\n";
    append_polygon(os, pair.first(), m, "#8ecae6", 0.006 * span);
    append_polygon(os, pair.second(), m, "#f4a261", 0.006 * span);
    append_labels(os, pair.first(), m, 0.04 * span);
    append_labels(os, pair.second(), m, 0.04 * span);
    os << "</svg>\n";
    return os.str();
}

} // namespace l1db
