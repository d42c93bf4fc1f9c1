#include "l1db/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace l1db {
namespace {

bool same_coord(double a, double b) { return std::abs(a - b) <= kEps; }

bool same_point(const Point& a, const Point& b) {
    return same_coord(a.x, b.x) && same_coord(a.y, b.y);
}

enum class Axis { horizontal, vertical };

struct Edge {
    Point a;
    Point b;
    Axis axis;

    double lo() const {
        return axis == Axis::horizontal ? std::min(a.x, b.x)
                                        : std::min(a.y, b.y);
    }
    double hi() const {
        return axis == Axis::horizontal ? std::max(a.x, b.x)
                                        : std::max(a.y, b.y);
    }
    // Coordinate of the line the edge lies on.
    double level() const { return axis == Axis::horizontal ? a.y : a.x; }
};

std::vector<Edge> edges_of(const std::vector<Point>& v) {
    std::vector<Edge> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        const Axis axis =
            same_coord(p.y, q.y) ? Axis::horizontal : Axis::vertical;
        out.push_back({p, q, axis});
    }
    return out;
}

// Contact test for two axis-aligned segments (any touch counts).
bool segments_touch(const Edge& e, const Edge& f) {
    if (e.axis == f.axis) {
        if (!same_coord(e.level(), f.level())) return false;
        return std::min(e.hi(), f.hi()) - std::max(e.lo(), f.lo()) >= -kEps;
    }
    const Edge& h = e.axis == Axis::horizontal ? e : f;
    const Edge& v = e.axis == Axis::horizontal ? f : e;
    return v.level() >= h.lo() - kEps && v.level() <= h.hi() + kEps &&
           h.level() >= v.lo() - kEps && h.level() <= v.hi() + kEps;
}

double signed_area(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

// Merges coordinates closer than kEps and returns the sorted distinct values.
std::vector<double> merged_levels(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs) {
        if (out.empty() || x - out.back() > kEps) out.push_back(x);
    }
    return out;
}

} // namespace

RectilinearPolygon::RectilinearPolygon(std::vector<Point> vertices)
    : verts_(std::move(vertices)) {
    // Drop an explicitly repeated closing vertex and consecutive duplicates.
    while (verts_.size() > 1 && same_point(verts_.front(), verts_.back()))
        verts_.pop_back();
    std::vector<Point> dedup;
    dedup.reserve(verts_.size());
    for (const Point& p : verts_) {
        if (dedup.empty() || !same_point(dedup.back(), p)) dedup.push_back(p);
    }
    verts_ = std::move(dedup);
    while (verts_.size() > 1 && same_point(verts_.front(), verts_.back()))
        verts_.pop_back();

    // Merge runs of collinear vertices that continue in the same direction.
    bool changed = true;
    while (changed && verts_.size() >= 3) {
        changed = false;
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = verts_[(i + n - 1) % n];
            const Point& cur = verts_[i];
            const Point& next = verts_[(i + 1) % n];
            const bool h = same_coord(prev.y, cur.y) && same_coord(cur.y, next.y);
            const bool v = same_coord(prev.x, cur.x) && same_coord(cur.x, next.x);
            if ((h && (cur.x - prev.x) * (next.x - cur.x) > 0.0) ||
                (v && (cur.y - prev.y) * (next.y - cur.y) > 0.0)) {
                verts_.erase(verts_.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    if (verts_.size() < 4)
        throw input_error("polygon needs at least four distinct corners");

    const auto es = edges_of(verts_);
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& e = es[i];
        const bool dx0 = same_coord(e.a.x, e.b.x);
        const bool dy0 = same_coord(e.a.y, e.b.y);
        if (!dx0 && !dy0)
            throw input_error("polygon edge is not axis-aligned");
        const Edge& f = es[(i + 1) % es.size()];
        if (e.axis == f.axis)
            throw input_error("polygon boundary reverses onto itself");
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 2; j < es.size(); ++j) {
            if (i == 0 && j == es.size() - 1) continue; // adjacent via wrap
            if (segments_touch(es[i], es[j]))
                throw input_error("polygon boundary touches itself");
        }
    }

    const double a = signed_area(verts_);
    if (std::abs(a) <= kEps)
        throw input_error("polygon encloses no area");
    if (a < 0.0) std::reverse(verts_.begin(), verts_.end());
}

double l1_length(std::span<const Point> pts, bool closed) {
    if (pts.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        total += std::abs(pts[i + 1].x - pts[i].x) +
                 std::abs(pts[i + 1].y - pts[i].y);
    }
    if (closed) {
        total += std::abs(pts.front().x - pts.back().x) +
                 std::abs(pts.front().y - pts.back().y);
    }
    return total;
}

double l1_length(const RectilinearPolygon& poly) {
    return l1_length(poly.vertices(), /*closed=*/true);
}

double area(const RectilinearPolygon& poly) {
    return signed_area(poly.vertices());
}

double shared_boundary_length(const RectilinearPolygon& a,
                              const RectilinearPolygon& b) {
    const auto ea = edges_of(a.vertices());
    const auto eb = edges_of(b.vertices());
    double total = 0.0;
    for (const Edge& e : ea) {
        for (const Edge& f : eb) {
            if (e.axis != f.axis || !same_coord(e.level(), f.level())) continue;
            const double ov = std::min(e.hi(), f.hi()) - std::max(e.lo(), f.lo());
            if (ov > kEps) total += ov;
        }
    }
    return total;
}

double double_bubble_perimeter(const RectilinearPolygon& a,
                               const RectilinearPolygon& b) {
    return l1_length(a) + l1_length(b) - shared_boundary_length(a, b);
}

BoundingBox bounding_box(const RectilinearPolygon& poly) {
    BoundingBox box{poly.vertices().front().x, poly.vertices().front().x,
                    poly.vertices().front().y, poly.vertices().front().y};
    for (const Point& p : poly.vertices()) {
        box.left = std::min(box.left, p.x);
        box.right = std::max(box.right, p.x);
        box.bottom = std::min(box.bottom, p.y);
        box.top = std::max(box.top, p.y);
    }
    return box;
}

RectilinearPolygon translated(const RectilinearPolygon& poly, double dx,
                              double dy) {
    std::vector<Point> v = poly.vertices();
    for (Point& p : v) {
        p.x += dx;
        p.y += dy;
    }
    return RectilinearPolygon(std::move(v));
}

RectilinearPolygon scaled(const RectilinearPolygon& poly, double factor) {
    if (factor <= 0.0)
        throw domain_error("scale factor must be positive");
    std::vector<Point> v = poly.vertices();
    for (Point& p : v) {
        p.x *= factor;
        p.y *= factor;
    }
    return RectilinearPolygon(std::move(v));
}

bool point_strictly_inside(const RectilinearPolygon& poly, const Point& p) {
    const auto es = edges_of(poly.vertices());
    for (const Edge& e : es) {
        if (e.axis == Axis::horizontal) {
            if (same_coord(p.y, e.level()) && p.x >= e.lo() - kEps &&
                p.x <= e.hi() + kEps)
                return false;
        } else {
            if (same_coord(p.x, e.level()) && p.y >= e.lo() - kEps &&
                p.y <= e.hi() + kEps)
                return false;
        }
    }
    // Half-open ray cast to the right; vertical edges only.
    bool inside = false;
    for (const Edge& e : es) {
        if (e.axis != Axis::vertical) continue;
        if (e.lo() <= p.y && p.y < e.hi() && e.level() > p.x) inside = !inside;
    }
    return inside;
}

bool interiors_overlap(const RectilinearPolygon& a,
                       const RectilinearPolygon& b) {
    const BoundingBox ba = bounding_box(a);
    const BoundingBox bb = bounding_box(b);
    const double left = std::max(ba.left, bb.left);
    const double right = std::min(ba.right, bb.right);
    const double bottom = std::max(ba.bottom, bb.bottom);
    const double top = std::min(ba.top, bb.top);
    if (right - left <= kEps || top - bottom <= kEps) return false;

    // Interior membership is constant on every open cell of the grid induced
    // by the combined vertex coordinates, so cell centers decide exactly.
    std::vector<double> xs{left, right};
    std::vector<double> ys{bottom, top};
    for (const Point& p : a.vertices()) {
        if (p.x > left && p.x < right) xs.push_back(p.x);
        if (p.y > bottom && p.y < top) ys.push_back(p.y);
    }
    for (const Point& p : b.vertices()) {
        if (p.x > left && p.x < right) xs.push_back(p.x);
        if (p.y > bottom && p.y < top) ys.push_back(p.y);
    }
    const std::vector<double> gx = merged_levels(std::move(xs));
    const std::vector<double> gy = merged_levels(std::move(ys));
    for (std::size_t i = 0; i + 1 < gx.size(); ++i) {
        for (std::size_t j = 0; j + 1 < gy.size(); ++j) {
            const Point c{0.5 * (gx[i] + gx[i + 1]), 0.5 * (gy[j] + gy[j + 1])};
            if (point_strictly_inside(a, c) && point_strictly_inside(b, c))
                return true;
        }
    }
    return false;
}

BubblePair::BubblePair(RectilinearPolygon first, RectilinearPolygon second)
    : first_(std::move(first)), second_(std::move(second)) {
    if (interiors_overlap(first_, second_))
        throw input_error("bubble cells must have disjoint interiors");
}

double BubblePair::perimeter() const {
    return double_bubble_perimeter(first_, second_);
}

double BubblePair::first_area() const { return area(first_); }

double BubblePair::second_area() const { return area(second_); }

} // namespace l1db
