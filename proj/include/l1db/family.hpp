#pragma once

#include <string>
#include <utility>
#include <vector>

#include "l1db/geometry.hpp"

namespace l1db {

// Which cell carries which prescribed area.  In the analytic context the two
// values are {1, alpha}; the reducer also uses it to report the areas carried
// by the two slots of its output configuration.
struct VolumeAssignment {
    double beta = 1.0;  // area carried by the first cell
    double gamma = 1.0; // area carried by the second cell
};

VolumeAssignment assignment_one_alpha(double alpha); // beta=1, gamma=alpha
VolumeAssignment assignment_alpha_one(double alpha); // beta=alpha, gamma=1
VolumeAssignment swapped(const VolumeAssignment& asg);

// "1:alpha" when beta >= gamma, otherwise "alpha:1".
std::string assignment_name(const VolumeAssignment& asg);

// Throws domain_error unless {beta, gamma} = {1, a} with a in (0,1]; returns a.
double assignment_alpha(const VolumeAssignment& asg);

enum class FamilyShape { kissing, embedded, general };

std::string shape_name(FamilyShape shape);

// Parameters of one candidate configuration.  Plain data on purpose: solver
// branches may produce parameter sets that violate the side constraints, and
// those must remain representable so they can be reported as invalid.
//
// kissing   A = [0,a]x[0,b]; B = [a,a+c]x[0,d] sharing the wall x=a.
// embedded  outer box [0,c]x[0,d]; first cell is the [c-a,c]x[d-b,d] corner
//           rectangle, second cell is the rest of the box.
// general   A = [0,b]x[0,a]; B wraps A's upper-right corner with a top slab
//           of height c reaching d into A's top edge and f beyond it, and a
//           right slab of width f reaching e down A's right edge.
struct FamilyConfig {
    FamilyShape shape = FamilyShape::kissing;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;
};

FamilyConfig kissing_config(double a, double b, double c, double d);
FamilyConfig embedded_config(double a, double b, double c, double d);
FamilyConfig general_config(double a, double b, double c, double d, double e,
                            double f);

struct ValidityReport {
    bool ok = true;
    std::vector<std::string> violated; // human-readable constraints that fail
};

// Checks the side constraints that make the parameters geometrically
// realizable (positivity plus the shape's containment/contact inequalities).
ValidityReport validate(const FamilyConfig& cfg);

// Additionally checks that the closed-form areas hit the assigned targets.
ValidityReport validate(const FamilyConfig& cfg, const VolumeAssignment& asg);

// Closed-form areas (first cell, second cell).
std::pair<double, double> areas(const FamilyConfig& cfg);

// Closed-form cluster perimeter of the configuration.
double closed_form_perimeter(const FamilyConfig& cfg);

// Builds the actual polygon pair.  Throws constraint_error when the side
// constraints fail, since no geometry exists for such parameters.
BubblePair realize(const FamilyConfig& cfg);

} // namespace l1db
