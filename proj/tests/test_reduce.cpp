#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l1db/oracle.hpp"
#include "l1db/reduce.hpp"
#include "testutil.hpp"

using namespace l1db;

namespace {

RectilinearPolygon rect(double x0, double y0, double x1, double y1) {
    return RectilinearPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

RectilinearPolygon u_shape() {
    return RectilinearPolygon(
        {{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
}

bool carries_areas(const Reduction& r, double x, double y) {
    double lo = std::min(x, y), hi = std::max(x, y);
    double blo = std::min(r.assignment.beta, r.assignment.gamma);
    double bhi = std::max(r.assignment.beta, r.assignment.gamma);
    return std::abs(blo - lo) <= 1e-9 && std::abs(bhi - hi) <= 1e-9;
}

} // namespace

TEST_CASE("containment names") {
    CHECK(containment_name(Containment::contained) == "Contained");
    CHECK(containment_name(Containment::two_corners) == "TwoCorners");
    CHECK(containment_name(Containment::one_corner) == "OneCorner");
    CHECK(containment_name(Containment::disjoint_boxes) == "DisjointBoxes");
    CHECK(containment_name(Containment::cross_overlap) == "CrossOverlap");
}

TEST_CASE("box-level case split") {
    BoundingBox host{0, 3, 0, 3};
    CHECK(classify_boxes(host, {1, 2, 1, 2}) == Containment::contained);
    CHECK(classify_boxes(host, {1, 2, 2, 4}) == Containment::two_corners);
    CHECK(classify_boxes(host, {2, 4, 2, 4}) == Containment::one_corner);
    CHECK(classify_boxes(host, {4, 5, 0, 1}) == Containment::disjoint_boxes);

    // Corners on the host boundary count as inside.
    CHECK(classify_boxes(host, {1, 3, 1, 2}) == Containment::contained);
    CHECK(classify_boxes(host, {3, 4, 3, 4}) == Containment::one_corner);
    CHECK(classify_boxes(host, {3, 4, 0, 3}) == Containment::two_corners);

    // Overlapping boxes with no corner containment: the crossing case.
    CHECK(classify_boxes({0, 3, 1, 2}, {1, 2, 0, 3}) ==
          Containment::cross_overlap);
    CHECK(classify_boxes({1, 2, 0, 3}, {0, 3, 1, 2}) ==
          Containment::cross_overlap);
}

TEST_CASE("pair classification picks the best ordering") {
    // Plug seated in the notch: only one ordering sees full containment.
    auto seated = classify(BubblePair(u_shape(), rect(1, 1, 2, 2)));
    CHECK(seated.kind == Containment::contained);
    CHECK(seated.touching_sides == 0);
    CHECK(seated.second_plays_b);

    // Flush side-by-side rectangles are symmetric: tie keeps the second cell
    // in the tested role.
    auto flush = classify(BubblePair(rect(0, 0, 1, 2), rect(1, 0, 2, 2)));
    CHECK(flush.kind == Containment::two_corners);
    CHECK(flush.second_plays_b);

    auto apart = classify(BubblePair(rect(0, 0, 1, 1), rect(5, 0, 6, 1)));
    CHECK(apart.kind == Containment::disjoint_boxes);

    // Carved configuration: the inner cell's box is contained in the outer
    // cell's box, so the first cell takes the tested role.
    auto carved = classify(realize(embedded_config(0.6, 0.8, 1.5, 2.0)));
    CHECK(carved.kind == Containment::contained);
    CHECK(carved.touching_sides == 2);
    CHECK_FALSE(carved.second_plays_b);
}

TEST_CASE("reduction of a seated plug") {
    BubblePair pair(u_shape(), rect(1, 1, 2, 2));
    auto r = reduce(pair);
    CHECK(r.containment.kind == Containment::contained);
    CHECK(r.input_perimeter == doctest::Approx(17.0));
    CHECK(r.output_perimeter <= r.input_perimeter + 1e-9);
    CHECK(r.output_perimeter == doctest::Approx(40.0 / 3.0).epsilon(1e-12));
    CHECK(r.config.shape == FamilyShape::embedded);
    CHECK(r.config.a == doctest::Approx(1.0));
    CHECK(r.config.b == doctest::Approx(1.0));
    CHECK(r.config.c == doctest::Approx(8.0 / 3.0));
    CHECK(r.config.d == doctest::Approx(3.0));
    CHECK(carries_areas(r, 7.0, 1.0));
    CHECK(r.assignment.beta == doctest::Approx(1.0));
    CHECK(r.assignment.gamma == doctest::Approx(7.0));

    // The reduced configuration is realizable and matches its closed form.
    auto back = realize(r.config);
    CHECK(back.perimeter() ==
          doctest::Approx(closed_form_perimeter(r.config)).epsilon(1e-12));
}

TEST_CASE("family members reduce to themselves") {
    // A flush kissing pair at the free stationary point survives unchanged.
    double c = std::sqrt(0.15), d = std::sqrt(0.6);
    auto kiss = realize(kissing_config(1.0, 1.0, c, d));
    auto rk = reduce(kiss);
    CHECK(rk.containment.kind == Containment::two_corners);
    CHECK(rk.config.shape == FamilyShape::kissing);
    CHECK(rk.output_perimeter ==
          doctest::Approx(rk.input_perimeter).epsilon(1e-12));
    CHECK(carries_areas(rk, 1.0, 0.3));

    // A carved pair reproduces its own parameters.
    auto emb = realize(embedded_config(0.6, 0.8, 1.5, 2.0));
    auto re = reduce(emb);
    CHECK(re.config.shape == FamilyShape::embedded);
    CHECK(re.config.a == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(re.config.b == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(re.config.c == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(re.config.d == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(re.output_perimeter ==
          doctest::Approx(re.input_perimeter).epsilon(1e-12));
}

TEST_CASE("distant cells fold into a kissing pair") {
    BubblePair pair(rect(0, 0, 1, 1), rect(5, 5, 6, 6));
    auto r = reduce(pair);
    CHECK(r.containment.kind == Containment::disjoint_boxes);
    CHECK(r.config.shape == FamilyShape::kissing);
    CHECK(r.config.a == doctest::Approx(1.0));
    CHECK(r.config.b == doctest::Approx(1.0));
    CHECK(r.config.c == doctest::Approx(1.0));
    CHECK(r.config.d == doctest::Approx(1.0));
    CHECK(r.input_perimeter == doctest::Approx(8.0));
    CHECK(r.output_perimeter == doctest::Approx(7.0));
    CHECK(carries_areas(r, 1.0, 1.0));
}

TEST_CASE("wrapped corner pairs lose no area and no optimality") {
    // An L wrapping a square corner, realized from the general shape.
    auto pair = realize(general_config(1, 1, 0.4, 0.6, 0.5, 0.3));
    auto r = reduce(pair);
    CHECK(r.output_perimeter <= r.input_perimeter + 1e-9);
    auto [a1, a2] = areas(general_config(1, 1, 0.4, 0.6, 0.5, 0.3));
    CHECK(carries_areas(r, a1, a2));
    CHECK(validate(r.config).ok);
}

TEST_CASE("random staircase pairs reduce monotonically") {
    int reduced = 0;
    for (std::uint64_t seed = 0; seed < 160; ++seed) {
        oracle::StaircaseSpec spec;
        spec.seed = seed;
        spec.steps = 1 + static_cast<int>(seed % 4);
        spec.target_areas = {1.0, 0.2 + 0.6 * ((seed % 7) / 7.0)};
        BubblePair pair = [&] {
            try {
                return oracle::sample_staircase_pair(spec);
            } catch (const generation_error&) {
                return BubblePair(rect(0, 0, 1, 1), rect(5, 0, 6, 1));
            }
        }();
        auto r = reduce(pair);
        ++reduced;
        CHECK(r.output_perimeter <= r.input_perimeter + 1e-9);
        CHECK(validate(r.config).ok);
        auto [s1, s2] = areas(r.config);
        double in1 = pair.first_area(), in2 = pair.second_area();
        CHECK(std::min(s1, s2) ==
              doctest::Approx(std::min(in1, in2)).epsilon(1e-9));
        CHECK(std::max(s1, s2) ==
              doctest::Approx(std::max(in1, in2)).epsilon(1e-9));
        // The reduced parameters must describe the areas they claim.
        CHECK(std::abs(s1 - r.assignment.beta) <= 1e-9);
        CHECK(std::abs(s2 - r.assignment.gamma) <= 1e-9);
    }
    CHECK(reduced == 160);
}

TEST_CASE("scale normalization") {
    BubblePair pair(rect(0, 0, 1, 0.5), rect(2, 0, 2.5, 0.25));
    auto [scaled_pair, factor] = normalize_scale(pair);
    CHECK(factor == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::max(scaled_pair.first_area(), scaled_pair.second_area()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scaled_pair.second_area() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(scaled_pair.perimeter() ==
          doctest::Approx(pair.perimeter() * factor).epsilon(1e-12));

    // Already normalized input keeps factor 1.
    auto [same, unit] = normalize_scale(scaled_pair);
    CHECK(unit == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.perimeter() ==
          doctest::Approx(scaled_pair.perimeter()).epsilon(1e-12));
}
