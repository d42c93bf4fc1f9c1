#include "l1db/family.hpp"

#include <algorithm>
#include <cmath>

namespace l1db {
namespace {

void require_positive(ValidityReport& r, double v, const char* name) {
    if (!(v > kEps)) {
        r.ok = false;
        r.violated.push_back(std::string(name) + " > 0");
    }
}

void require_ge(ValidityReport& r, double lhs, double rhs, const char* text) {
    if (!(lhs - rhs >= -kEps)) {
        r.ok = false;
        r.violated.push_back(text);
    }
}

} // namespace

VolumeAssignment assignment_one_alpha(double alpha) { return {1.0, alpha}; }

VolumeAssignment assignment_alpha_one(double alpha) { return {alpha, 1.0}; }

VolumeAssignment swapped(const VolumeAssignment& asg) {
    return {asg.gamma, asg.beta};
}

std::string assignment_name(const VolumeAssignment& asg) {
    return asg.beta >= asg.gamma ? "1:alpha" : "alpha:1";
}

double assignment_alpha(const VolumeAssignment& asg) {
    const double hi = std::max(asg.beta, asg.gamma);
    const double lo = std::min(asg.beta, asg.gamma);
    if (std::abs(hi - 1.0) > kEps || !(lo > 0.0) || lo > 1.0 + kEps)
        throw domain_error(
            "volume assignment must carry areas {1, alpha} with alpha in (0,1]");
    return lo;
}

std::string shape_name(FamilyShape shape) {
    switch (shape) {
    case FamilyShape::kissing: return "Kissing";
    case FamilyShape::embedded: return "Embedded";
    case FamilyShape::general: return "General";
    }
    return "Unknown";
}

FamilyConfig kissing_config(double a, double b, double c, double d) {
    return {FamilyShape::kissing, a, b, c, d, 0.0, 0.0};
}

FamilyConfig embedded_config(double a, double b, double c, double d) {
    return {FamilyShape::embedded, a, b, c, d, 0.0, 0.0};
}

FamilyConfig general_config(double a, double b, double c, double d, double e,
                            double f) {
    return {FamilyShape::general, a, b, c, d, e, f};
}

ValidityReport validate(const FamilyConfig& cfg) {
    ValidityReport r;
    switch (cfg.shape) {
    case FamilyShape::kissing:
        require_positive(r, cfg.a, "a");
        require_positive(r, cfg.b, "b");
        require_positive(r, cfg.c, "c");
        require_positive(r, cfg.d, "d");
        require_ge(r, cfg.b, cfg.d, "b >= d");
        break;
    case FamilyShape::embedded:
        require_positive(r, cfg.a, "a");
        require_positive(r, cfg.b, "b");
        require_positive(r, cfg.c, "c");
        require_positive(r, cfg.d, "d");
        require_ge(r, cfg.c, cfg.a, "c >= a");
        require_ge(r, cfg.d, cfg.b, "d >= b");
        if (!(cfg.c * cfg.d - cfg.a * cfg.b > kEps)) {
            r.ok = false;
            r.violated.push_back("cd > ab");
        }
        break;
    case FamilyShape::general:
        // Zero d/e/c/f degenerate into the simpler variants and are rejected
        // here; callers express such shapes as Kissing or Embedded instead.
        require_positive(r, cfg.a, "a");
        require_positive(r, cfg.b, "b");
        require_positive(r, cfg.c, "c");
        require_positive(r, cfg.d, "d");
        require_positive(r, cfg.e, "e");
        require_positive(r, cfg.f, "f");
        require_ge(r, cfg.b, cfg.d, "b >= d");
        require_ge(r, cfg.a, cfg.e, "e <= a");
        break;
    }
    return r;
}

ValidityReport validate(const FamilyConfig& cfg, const VolumeAssignment& asg) {
    ValidityReport r = validate(cfg);
    const auto [sa, sb] = areas(cfg);
    if (std::abs(sa - asg.beta) > kEps) {
        r.ok = false;
        r.violated.push_back("first area = beta");
    }
    if (std::abs(sb - asg.gamma) > kEps) {
        r.ok = false;
        r.violated.push_back("second area = gamma");
    }
    return r;
}

std::pair<double, double> areas(const FamilyConfig& cfg) {
    switch (cfg.shape) {
    case FamilyShape::kissing:
        return {cfg.a * cfg.b, cfg.c * cfg.d};
    case FamilyShape::embedded:
        return {cfg.a * cfg.b, cfg.c * cfg.d - cfg.a * cfg.b};
    case FamilyShape::general:
        return {cfg.a * cfg.b,
                cfg.c * cfg.d + cfg.c * cfg.f + cfg.e * cfg.f};
    }
    return {0.0, 0.0};
}

double closed_form_perimeter(const FamilyConfig& cfg) {
    switch (cfg.shape) {
    case FamilyShape::kissing:
        return 2.0 * (cfg.a + cfg.b + cfg.c) + cfg.d;
    case FamilyShape::embedded:
        return 2.0 * (cfg.c + cfg.d) + cfg.a + cfg.b;
    case FamilyShape::general:
        return 2.0 * (cfg.a + cfg.b + cfg.c + cfg.f) + cfg.d + cfg.e;
    }
    return 0.0;
}

BubblePair realize(const FamilyConfig& cfg) {
    const ValidityReport r = validate(cfg);
    if (!r.ok) {
        std::string what = "configuration violates: ";
        for (std::size_t i = 0; i < r.violated.size(); ++i) {
            if (i) what += ", ";
            what += r.violated[i];
        }
        throw constraint_error(what);
    }
    const double a = cfg.a, b = cfg.b, c = cfg.c, d = cfg.d;
    switch (cfg.shape) {
    case FamilyShape::kissing: {
        RectilinearPolygon first({{0, 0}, {a, 0}, {a, b}, {0, b}});
        RectilinearPolygon second({{a, 0}, {a + c, 0}, {a + c, d}, {a, d}});
        return BubblePair(std::move(first), std::move(second));
    }
    case FamilyShape::embedded: {
        RectilinearPolygon first(
            {{c - a, d - b}, {c, d - b}, {c, d}, {c - a, d}});
        std::vector<Point> outer_minus_corner;
        if (d - b <= kEps) {
            // Inner cell spans the full height: the rest is a rectangle.
            outer_minus_corner = {{0, 0}, {c - a, 0}, {c - a, d}, {0, d}};
        } else if (c - a <= kEps) {
            // Inner cell spans the full width: the rest is a rectangle.
            outer_minus_corner = {{0, 0}, {c, 0}, {c, d - b}, {0, d - b}};
        } else {
            outer_minus_corner = {{0, 0},         {c, 0},     {c, d - b},
                                  {c - a, d - b}, {c - a, d}, {0, d}};
        }
        RectilinearPolygon second(std::move(outer_minus_corner));
        return BubblePair(std::move(first), std::move(second));
    }
    case FamilyShape::general: {
        const double e = cfg.e, f = cfg.f;
        RectilinearPolygon first({{0, 0}, {b, 0}, {b, a}, {0, a}});
        RectilinearPolygon second({{b, a - e},
                                   {b + f, a - e},
                                   {b + f, a + c},
                                   {b - d, a + c},
                                   {b - d, a},
                                   {b, a}});
        return BubblePair(std::move(first), std::move(second));
    }
    }
    throw input_error("unknown family shape");
}

} // namespace l1db
