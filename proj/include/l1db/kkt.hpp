#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l1db/family.hpp"

namespace l1db::kkt {

enum class Branch {
    kissing_unconstrained,
    kissing_constrained,
    embedded,
    general_unconstrained,
    general_mu1,
};

std::string branch_name(Branch b);

// One analytic stationary point of the constrained perimeter minimization.
// Infeasible candidates are reported, not suppressed: `valid` is false and
// `violated` names the failing side constraint.
struct BranchSolution {
    Branch branch = Branch::kissing_unconstrained;
    VolumeAssignment assignment;
    std::optional<FamilyConfig> config; // absent when no parameter set exists
    double perimeter = 0.0;
    bool valid = false;
    std::string violated; // failing constraint when invalid
    std::string note;     // extra context worth surfacing
};

// Ratio where the minimizing branch first changes: (688 - 480*sqrt(2))/49.
double first_critical_alpha();

// Kissing-rectangle stationary points.  The unconstrained point is always
// reported (flagged invalid when its wall heights violate b >= d); the
// constrained point (b = d active) is emitted where that constraint binds.
std::vector<BranchSolution> solve_kissing(const VolumeAssignment& asg);

// Embedded-rectangle stationary point: always geometrically valid.
BranchSolution solve_embedded(const VolumeAssignment& asg);

// General-case stationary point with all walls free: reported invalid.
BranchSolution solve_general_unconstrained(const VolumeAssignment& asg);

// General-case stationary point with one multiplier active: reported invalid;
// the mirrored variant is the same solution by symmetry.
BranchSolution solve_general_mu1(const VolumeAssignment& asg);

// All five branches for one assignment, in declaration order.
std::vector<BranchSolution> all_branches(const VolumeAssignment& asg);

// Minimum perimeter over the valid branches available to one assignment.
// Kissing clusters are mirror-symmetric in their two cells, so the kissing
// candidates of the swapped assignment belong to this family as well and are
// included; embedded clusters distinguish inner from outer and are not.
BranchSolution per_assignment_minimum(double alpha, const VolumeAssignment& asg);

struct GammaResult {
    double alpha = 0.0;
    double perimeter = 0.0;
    std::vector<BranchSolution> minimizers; // every branch within 1e-9 of min
    std::string branch_label;               // closed-form piece that applies
};

// Minimum over both assignments and all valid branches.
GammaResult global_minimizer(double alpha);

// Piecewise closed form of the optimal perimeter:
//   4*sqrt(1+alpha) + 2*sqrt(alpha)  on (0, alpha1]
//   4 + 2*sqrt(2*alpha)              on (alpha1, 1/2)
//   2*sqrt(6*(1+alpha))              on [1/2, 1]
double gamma_perimeter(double alpha);

struct CriticalAlphas {
    double first_order = 0.0;  // closed form (688 - 480*sqrt(2))/49
    double second_order = 0.0; // 1/2
    // Root of the branch-difference function located by bisection; must agree
    // with the closed form to 1e-12.
    double first_order_numeric = 0.0;
};

CriticalAlphas critical_alphas();

} // namespace l1db::kkt
