#pragma once

#include <string>

#include "l1db/family.hpp"

namespace l1db {

// Renders the realized pair of a valid configuration as a standalone SVG:
// both polygons, side-length labels to 6 significant digits, and a viewBox
// tight to the joint bounding box plus a 10% margin.  Byte-deterministic for
// identical input.
std::string render_svg(const FamilyConfig& cfg);

} // namespace l1db
