#pragma once

#include <string>
#include <utility>

#include "l1db/family.hpp"
#include "l1db/geometry.hpp"

namespace l1db {

enum class Containment {
    contained,
    two_corners,
    one_corner,
    disjoint_boxes,
    cross_overlap,
};

std::string containment_name(Containment c);

struct ContainmentCase {
    Containment kind = Containment::disjoint_boxes;
    // Contained only: how many sides of the tested box lie flush on the host
    // box boundary.
    int touching_sides = 0;
    // Role resolution: true when the second cell's box is the tested one.
    bool second_plays_b = true;
};

// Box-level case split, exposed for direct testing: how many corners of
// `tested` lie in the closed `host` box (corner-on-boundary counts as in).
Containment classify_boxes(const BoundingBox& host, const BoundingBox& tested);

// Case split over both role orderings with priority
// Contained > TwoCorners > OneCorner > DisjointBoxes > CrossOverlap;
// ties keep the second cell in the tested role.
ContainmentCase classify(const BubblePair& pair);

struct Reduction {
    FamilyConfig config;
    // Areas carried by the two slots of `config`; equal to the input areas as
    // a pair, possibly in swapped order when role normalization swapped them.
    VolumeAssignment assignment;
    ContainmentCase containment;
    double input_perimeter = 0.0;
    double output_perimeter = 0.0;
};

// Maps an arbitrary pair into the configuration family: the result carries
// exactly the input areas and a closed-form perimeter no larger than the
// measured cluster perimeter (within 1e-9).  The cross-overlap box case has
// no construction and raises unsupported_case_error.
Reduction reduce(const BubblePair& pair);

// Uniformly rescales so the larger cell has area 1; returns the factor.
std::pair<BubblePair, double> normalize_scale(const BubblePair& pair);

} // namespace l1db
