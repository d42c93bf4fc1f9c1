#pragma once

// Shared fixtures for the test binaries: the reference sweep table used by the
// figure reproduction checks, generators for random valid configurations, and
// a small CSV splitter for checking CLI output.

#include <array>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "l1db/family.hpp"
#include "l1db/geometry.hpp"

namespace testutil {

// One row of the reference perimeter-vs-area-ratio chart, values rounded to
// 8 significant digits.  `red` is the best configuration that keeps the larger
// cell at volume 1; `blue` additionally allows the smaller cell to take the
// unit volume, which wins below the first critical ratio.
struct CurvePoint {
    double alpha;
    double red;
    double blue;
};

inline constexpr std::array<CurvePoint, 23> kCurveTable = {{
    {0.0, 4.0, 4.0},
    {0.0125, 4.3162278, 4.2485292},
    {0.025, 4.4472136, 4.3659191},
    {0.05, 4.6324555, 4.5459939},
    {0.1, 4.8944272, 4.8276909},
    {0.15, 5.0954451, 5.0641188},
    {0.2, 5.2649111, 5.2649111},
    {0.25, 5.4142136, 5.4142136},
    {0.3, 5.5491933, 5.5491933},
    {0.35, 5.6733201, 5.6733201},
    {0.4, 5.7888544, 5.7888544},
    {0.45, 5.8973666, 5.8973666},
    {0.5, 6.0, 6.0},
    {0.55, 6.0991803, 6.0991803},
    {0.6, 6.1967734, 6.1967734},
    {0.65, 6.2928531, 6.2928531},
    {0.7, 6.3874878, 6.3874878},
    {0.75, 6.4807407, 6.4807407},
    {0.8, 6.5726707, 6.5726707},
    {0.85, 6.6633325, 6.6633325},
    {0.9, 6.7527772, 6.7527772},
    {0.95, 6.8410526, 6.8410526},
    {1.0, 6.9282032, 6.9282032},
}};

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Draws a config that satisfies the validity constraints by construction.
// Degenerate edges (e.g. equal inner and outer widths for the carved variant)
// are kept away from the tolerance band so realizations stay hexagonal.
inline l1db::FamilyConfig random_valid_config(std::mt19937_64& rng) {
    switch (rng() % 3) {
    case 0: {
        double b = uniform(rng, 0.3, 2.0);
        double d = uniform(rng, 0.05, b);
        return l1db::kissing_config(uniform(rng, 0.1, 2.0), b,
                                    uniform(rng, 0.1, 2.0), d);
    }
    case 1: {
        double a = uniform(rng, 0.2, 1.5);
        double b = uniform(rng, 0.2, 1.5);
        double c = a + uniform(rng, 0.05, 1.5);
        double d = b + uniform(rng, 0.05, 1.5);
        return l1db::embedded_config(a, b, c, d);
    }
    default: {
        double a = uniform(rng, 0.3, 2.0);
        double e = uniform(rng, 0.05, a);
        double b = uniform(rng, 0.3, 2.0);
        double d = uniform(rng, 0.05, b);
        return l1db::general_config(a, b, uniform(rng, 0.05, 2.0), d, e,
                                    uniform(rng, 0.05, 2.0));
    }
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream ss(text);
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace testutil
