#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "l1db/family.hpp"
#include "l1db/geometry.hpp"

namespace l1db::oracle {

// Outcome of a nested-grid search over the configuration family at one ratio.
struct SearchReport {
    double alpha = 0.0;
    FamilyConfig best_config;
    double best_perimeter = 0.0;
    double analytic_perimeter = 0.0;
    double gap = 0.0;  // best_perimeter - analytic_perimeter
    long long evaluations = 0;
};

// Derivative-free check of the analytic minimum: refines a uniform grid over
// each variant's free parameters (two eliminated through the area equations),
// both area assignments, shrinking the window around the incumbent 10x per
// level with 11 points per axis.
SearchReport grid_search_family(double alpha, int levels);

struct StaircaseSpec {
    std::uint64_t seed = 0;
    int steps = 1;
    std::pair<double, double> target_areas{1.0, 1.0};
};

// Deterministic seeded generator of a valid pair of staircase polygons with
// the requested areas (within 1e-9).  The low two bits of the seed select the
// arrangement: 0 disjoint boxes, 1 box through one side, 2 box over one
// corner, 3 box contained (the host then gets at least two columns, since a
// plain rectangle cannot contain a disjoint cell).  Throws generation_error
// when no valid placement is found after bounded retries.
BubblePair sample_staircase_pair(const StaircaseSpec& spec);

struct LowerBoundReport {
    double alpha = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    int skipped = 0;   // unsupported-case reductions, reported not dropped
    double min_gap = 0.0;  // min over samples of measured perimeter - analytic
    std::vector<std::string> messages;
};

// Samples pairs with areas (1, alpha) and checks that none beats the analytic
// minimum and that reduction never increases perimeter or changes areas.
LowerBoundReport certify_lower_bound(double alpha, int samples,
                                     std::uint64_t seed);

struct KinkReport {
    double grid_step = 0.0;
    double fd_step = 0.0;
    std::vector<double> first_order;   // ratios where the slope jumps
    std::vector<double> second_order;  // ratios where the curvature jumps
};

// Scans the minimal-perimeter curve with central finite differences and flags
// ratios where a derivative jumps by more than 10x the background variation.
KinkReport detect_kinks(double grid_step, double fd_step);

struct SuiteResult {
    std::string suite;
    bool passed = false;
    int checks = 0;
    std::vector<std::string> failures;
};

// Self-check bundles behind the command-line `verify` subcommand.
SuiteResult verify_kkt(int samples, std::uint64_t seed);
SuiteResult verify_reduce(int samples, std::uint64_t seed);
SuiteResult verify_grid(int samples, std::uint64_t seed, int levels);
SuiteResult verify_kinks();

} // namespace l1db::oracle
