#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "l1db/geometry.hpp"

using namespace l1db;

namespace {

RectilinearPolygon unit_square() {
    return RectilinearPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

RectilinearPolygon rect(double x0, double y0, double x1, double y1) {
    return RectilinearPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// 3x3 square with a 1x1 notch cut into the middle of the top edge.
RectilinearPolygon u_shape() {
    return RectilinearPolygon(
        {{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
}

} // namespace

TEST_CASE("constructor normalizes vertex lists") {
    // Repeated closing vertex is dropped.
    RectilinearPolygon closed({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(closed.size() == 4);

    // Consecutive duplicates and collinear runs are merged.
    RectilinearPolygon noisy({{0, 0},
                              {0.5, 0},
                              {0.5, 0},
                              {1, 0},
                              {1, 1},
                              {0, 1}});
    CHECK(noisy.size() == 4);

    // Clockwise input is stored counterclockwise (positive signed area).
    RectilinearPolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(area(cw) == doctest::Approx(1.0));
    const auto& v = cw.vertices();
    double signed_area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        signed_area += p.x * q.y - q.x * p.y;
    }
    CHECK(signed_area > 0.0);
}

TEST_CASE("constructor rejects degenerate boundaries") {
    CHECK_THROWS_AS(RectilinearPolygon({{0, 0}, {1, 0}, {0, 1}}), input_error);
    // Diagonal edge.
    CHECK_THROWS_AS(RectilinearPolygon({{0, 0}, {1, 1}, {1, 0}, {0, 0.5}}),
                    input_error);
    // Zero area (spike there and back).
    CHECK_THROWS_AS(RectilinearPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 0}}),
                    input_error);
    // Figure-eight style self contact at (1,1).
    CHECK_THROWS_AS(RectilinearPolygon({{0, 0},
                                        {1, 0},
                                        {1, 1},
                                        {2, 1},
                                        {2, 2},
                                        {1, 2},
                                        {1, 1},
                                        {0, 1}}),
                    input_error);
    // Boundary touching itself along a segment.
    CHECK_THROWS_AS(RectilinearPolygon({{0, 0},
                                        {3, 0},
                                        {3, 1},
                                        {1, 1},
                                        {1, 2},
                                        {2, 2},
                                        {2, 1},
                                        {0, 1}}),
                    input_error);
}

TEST_CASE("length and area of basic shapes") {
    auto sq = unit_square();
    CHECK(l1_length(sq) == doctest::Approx(4.0));
    CHECK(area(sq) == doctest::Approx(1.0));

    auto u = u_shape();
    CHECK(l1_length(u) == doctest::Approx(16.0));
    CHECK(area(u) == doctest::Approx(7.0));

    std::vector<Point> open_path = {{0, 0}, {2, 0}, {2, 3}};
    CHECK(l1_length(open_path, false) == doctest::Approx(5.0));
    CHECK(l1_length(open_path, true) == doctest::Approx(10.0));
}

TEST_CASE("shared boundary length counts collinear overlap once") {
    auto left = rect(0, 0, 1, 2);
    auto right = rect(1, 0, 2, 2);
    CHECK(shared_boundary_length(left, right) == doctest::Approx(2.0));

    // Partial overlap of the common wall.
    auto shifted = rect(1, 1, 2, 3);
    CHECK(shared_boundary_length(left, shifted) == doctest::Approx(1.0));

    // Corner contact only.
    auto corner = rect(1, 2, 2, 3);
    CHECK(shared_boundary_length(left, corner) == doctest::Approx(0.0));

    // Disjoint.
    auto far = rect(5, 5, 6, 6);
    CHECK(shared_boundary_length(left, far) == doctest::Approx(0.0));
}

TEST_CASE("cluster perimeter subtracts the common wall") {
    auto left = rect(0, 0, 1, 2);
    auto right = rect(1, 0, 2, 2);
    // 6 + 6 - 2.
    CHECK(double_bubble_perimeter(left, right) == doctest::Approx(10.0));

    // A square seated in the notch of the U: walls on three sides.
    auto u = u_shape();
    auto plug = rect(1, 1, 2, 2);
    CHECK(shared_boundary_length(u, plug) == doctest::Approx(3.0));
    CHECK(double_bubble_perimeter(u, plug) == doctest::Approx(17.0));
}

TEST_CASE("bounding box and transforms") {
    auto u = u_shape();
    auto bb = bounding_box(u);
    CHECK(bb.left == doctest::Approx(0.0));
    CHECK(bb.right == doctest::Approx(3.0));
    CHECK(bb.bottom == doctest::Approx(0.0));
    CHECK(bb.top == doctest::Approx(3.0));
    CHECK(bb.width() == doctest::Approx(3.0));
    CHECK(bb.perimeter() == doctest::Approx(12.0));
    CHECK(bb.contains({1.5, 1.5}));
    CHECK_FALSE(bb.contains({3.5, 1.5}));

    auto moved = translated(u, 2.0, -1.0);
    CHECK(bounding_box(moved).left == doctest::Approx(2.0));
    CHECK(bounding_box(moved).bottom == doctest::Approx(-1.0));
    CHECK(area(moved) == doctest::Approx(7.0));

    auto grown = scaled(u, 2.0);
    CHECK(area(grown) == doctest::Approx(28.0));
    CHECK(l1_length(grown) == doctest::Approx(32.0));
    CHECK_THROWS_AS(scaled(u, 0.0), domain_error);
    CHECK_THROWS_AS(scaled(u, -1.0), domain_error);
}

TEST_CASE("strict interior test") {
    auto u = u_shape();
    CHECK(point_strictly_inside(u, {0.5, 0.5}));
    CHECK(point_strictly_inside(u, {2.5, 2.5}));
    // The notch is outside.
    CHECK_FALSE(point_strictly_inside(u, {1.5, 2.0}));
    // Boundary points are not strictly inside.
    CHECK_FALSE(point_strictly_inside(u, {0.0, 0.5}));
    CHECK_FALSE(point_strictly_inside(u, {1.5, 1.0}));
    CHECK_FALSE(point_strictly_inside(u, {-1.0, 0.5}));
}

TEST_CASE("interior overlap detection") {
    auto a = rect(0, 0, 2, 2);
    CHECK(interiors_overlap(a, rect(1, 1, 3, 3)));
    // Shared wall only.
    CHECK_FALSE(interiors_overlap(a, rect(2, 0, 3, 2)));
    // Corner touch only.
    CHECK_FALSE(interiors_overlap(a, rect(2, 2, 3, 3)));
    // One inside the other.
    CHECK(interiors_overlap(a, rect(0.5, 0.5, 1.5, 1.5)));
    // Nested in the notch: bounding boxes overlap, interiors do not.
    CHECK_FALSE(interiors_overlap(u_shape(), rect(1, 1, 2, 2)));
    CHECK(interiors_overlap(u_shape(), rect(1, 0.5, 2, 2)));
}

TEST_CASE("bubble pair validates and measures") {
    BubblePair pair(u_shape(), rect(1, 1, 2, 2));
    CHECK(pair.first_area() == doctest::Approx(7.0));
    CHECK(pair.second_area() == doctest::Approx(1.0));
    CHECK(pair.perimeter() == doctest::Approx(17.0));

    CHECK_THROWS_AS(BubblePair(rect(0, 0, 2, 2), rect(1, 1, 3, 3)),
                    input_error);
}
