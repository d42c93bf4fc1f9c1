#pragma once

#include <span>
#include <vector>

#include "l1db/errors.hpp"

namespace l1db {

// Comparison slack used throughout for coordinate coincidence tests.
inline constexpr double kEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct BoundingBox {
    double left = 0.0;
    double right = 0.0;
    double bottom = 0.0;
    double top = 0.0;

    double width() const { return right - left; }
    double height() const { return top - bottom; }
    double perimeter() const { return 2.0 * (width() + height()); }
    bool contains(const Point& p, double eps = kEps) const {
        return p.x >= left - eps && p.x <= right + eps && p.y >= bottom - eps &&
               p.y <= top + eps;
    }
};

// A simple closed axis-aligned polygon with positive area.
//
// The constructor normalizes the vertex list (drops a repeated closing vertex,
// removes consecutive duplicates, merges collinear runs), validates that the
// boundary is rectilinear with alternating horizontal/vertical edges and no
// self-contact, and stores the vertices in counterclockwise order.
class RectilinearPolygon {
public:
    explicit RectilinearPolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

private:
    std::vector<Point> verts_;
};

// Total ℓ¹ length of a polyline; `closed` adds the segment from back to front.
double l1_length(std::span<const Point> pts, bool closed);

// Boundary length of a polygon (all edges are axis-aligned, so ℓ¹ length and
// Euclidean length agree edge by edge).
double l1_length(const RectilinearPolygon& poly);

// Enclosed area via the shoelace formula; positive for CCW polygons.
double area(const RectilinearPolygon& poly);

// Total length of the overlap between the two boundaries: for every pair of
// collinear edges, the length of their common interval.
double shared_boundary_length(const RectilinearPolygon& a,
                              const RectilinearPolygon& b);

// Perimeter of the two-cell cluster: |∂A| + |∂B| − |∂A ∩ ∂B|.
double double_bubble_perimeter(const RectilinearPolygon& a,
                               const RectilinearPolygon& b);

BoundingBox bounding_box(const RectilinearPolygon& poly);

RectilinearPolygon translated(const RectilinearPolygon& poly, double dx,
                              double dy);

// Scales about the origin; `factor` must be positive.
RectilinearPolygon scaled(const RectilinearPolygon& poly, double factor);

// Strict interior test by horizontal ray casting; points within kEps of the
// boundary report false.
bool point_strictly_inside(const RectilinearPolygon& poly, const Point& p);

// Whether the open interiors intersect.  Decided exactly by refining the
// plane into the grid induced by all vertex coordinates of both polygons and
// testing cell centers, so touching boundaries never count as overlap.
bool interiors_overlap(const RectilinearPolygon& a,
                       const RectilinearPolygon& b);

// Two disjoint-interior cells forming one cluster.
struct BubblePair {
    BubblePair(RectilinearPolygon first, RectilinearPolygon second);

    const RectilinearPolygon& first() const { return first_; }
    const RectilinearPolygon& second() const { return second_; }

    double perimeter() const;
    double first_area() const;
    double second_area() const;

private:
    RectilinearPolygon first_;
    RectilinearPolygon second_;
};

} // namespace l1db
