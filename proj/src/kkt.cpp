#include "l1db/kkt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace l1db::kkt {
namespace {

void require_ratio(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0 + kEps)
        throw domain_error("area ratio must lie in (0, 1]");
}

// The two curves crossing at the first critical ratio.
double embedded_small_inside(double alpha) {
    return 2.0 * std::sqrt(alpha) + 4.0 * std::sqrt(1.0 + alpha);
}

double kissing_flat(double alpha) { return 4.0 + 2.0 * std::sqrt(2.0 * alpha); }

bool close(double a, double b) { return std::abs(a - b) <= kEps; }

} // namespace

std::string branch_name(Branch b) {
    switch (b) {
    case Branch::kissing_unconstrained: return "KissingUnconstrained";
    case Branch::kissing_constrained: return "KissingConstrained";
    case Branch::embedded: return "Embedded";
    case Branch::general_unconstrained: return "GeneralUnconstrained";
    case Branch::general_mu1: return "GeneralMu1";
    }
    return "Unknown";
}

double first_critical_alpha() {
    return (688.0 - 480.0 * std::sqrt(2.0)) / 49.0;
}

std::vector<BranchSolution> solve_kissing(const VolumeAssignment& asg) {
    assignment_alpha(asg);
    const double beta = asg.beta, gamma = asg.gamma;
    std::vector<BranchSolution> out;

    // Stationary point with every wall free: a = b = sqrt(beta),
    // c = sqrt(gamma/2), d = sqrt(2*gamma).
    {
        const double a = std::sqrt(beta);
        const double d = std::sqrt(2.0 * gamma);
        const FamilyConfig cfg = kissing_config(a, a, std::sqrt(gamma / 2.0), d);
        const bool feasible = a - d >= -kEps;
        out.push_back({Branch::kissing_unconstrained, asg, cfg,
                       4.0 * a + 2.0 * d, feasible, feasible ? "" : "b >= d",
                       ""});
    }

    // Stationary point with the wall constraint b = d active; it binds
    // exactly when the free solution has b <= d, i.e. beta <= 2*gamma.
    if (beta <= 2.0 * gamma + kEps) {
        const double t = std::sqrt(2.0 * (beta + gamma) / 3.0);
        const FamilyConfig cfg = kissing_config(beta / t, t, gamma / t, t);
        out.push_back({Branch::kissing_constrained, asg, cfg,
                       2.0 * std::sqrt(6.0 * (beta + gamma)), true, "", ""});
    }
    return out;
}

BranchSolution solve_embedded(const VolumeAssignment& asg) {
    assignment_alpha(asg);
    const double a = std::sqrt(asg.beta);
    const double c = std::sqrt(asg.beta + asg.gamma);
    const FamilyConfig cfg = embedded_config(a, a, c, c);
    std::string note;
    if (asg.beta >= asg.gamma)
        note = "never minimal under this assignment: the kissing branches are "
               "shorter for every ratio";
    return {Branch::embedded, asg, cfg, 2.0 * a + 4.0 * c, true, "", note};
}

BranchSolution solve_general_unconstrained(const VolumeAssignment& asg) {
    assignment_alpha(asg);
    const double a = std::sqrt(asg.beta);
    const double t = std::sqrt(asg.gamma / 3.0);
    const FamilyConfig cfg = general_config(a, a, t, t, t, t);
    std::string note;
    if (a - t >= -kEps)
        note = "parameter inequalities hold numerically here, yet the value "
               "4*sqrt(beta)+2*sqrt(3*gamma) always exceeds the kissing value "
               "4*sqrt(beta)+2*sqrt(2*gamma); the branch never minimizes";
    return {Branch::general_unconstrained, asg, cfg, 4.0 * a + 6.0 * t, false,
            "b >= d", note};
}

BranchSolution solve_general_mu1(const VolumeAssignment& asg) {
    assignment_alpha(asg);
    const double beta = asg.beta, gamma = asg.gamma;
    const double a = std::sqrt(beta / 2.0);
    const double b = std::sqrt(2.0 * beta); // = d
    const double c =
        (std::sqrt(2.0 * beta) + std::sqrt(2.0 * beta + 16.0 * gamma)) / 8.0;
    const double f = (gamma - c * b) / (2.0 * c); // area equation, e = c
    const double perimeter = 2.0 * (a + b + c + f) + b + c;

    std::optional<FamilyConfig> cfg;
    std::string note;
    if (f > kEps) {
        cfg = general_config(a, b, c, b, c, f);
    } else {
        note = "the area equation forces f <= 0: no geometric configuration "
               "exists for these parameters";
    }
    if (c <= a + kEps && note.empty())
        note = "e <= a holds numerically here, but the area equation already "
               "fails; the branch never yields a feasible configuration";
    return {Branch::general_mu1, asg, cfg, perimeter, false, "e <= a", note};
}

std::vector<BranchSolution> all_branches(const VolumeAssignment& asg) {
    std::vector<BranchSolution> out = solve_kissing(asg);
    out.push_back(solve_embedded(asg));
    out.push_back(solve_general_unconstrained(asg));
    out.push_back(solve_general_mu1(asg));
    return out;
}

BranchSolution per_assignment_minimum(double alpha,
                                      const VolumeAssignment& asg) {
    require_ratio(alpha);
    if (std::abs(assignment_alpha(asg) - std::min(alpha, 1.0)) > kEps)
        throw domain_error("assignment areas do not match the given ratio");

    std::vector<BranchSolution> cands = all_branches(asg);
    for (BranchSolution& s : solve_kissing(swapped(asg)))
        cands.push_back(std::move(s));

    const BranchSolution* best = nullptr;
    for (const BranchSolution& s : cands) {
        if (!s.valid) continue;
        if (best == nullptr || s.perimeter < best->perimeter) best = &s;
    }
    if (best == nullptr)
        throw domain_error("no valid branch for this assignment");
    return *best;
}

GammaResult global_minimizer(double alpha) {
    require_ratio(alpha);
    std::vector<BranchSolution> cands = all_branches(assignment_one_alpha(alpha));
    for (BranchSolution& s : all_branches(assignment_alpha_one(alpha)))
        cands.push_back(std::move(s));

    double best = std::numeric_limits<double>::infinity();
    for (const BranchSolution& s : cands)
        if (s.valid) best = std::min(best, s.perimeter);

    GammaResult result;
    result.alpha = alpha;
    result.perimeter = best;
    for (const BranchSolution& s : cands) {
        if (!s.valid || s.perimeter > best + kEps) continue;
        const bool duplicate =
            std::any_of(result.minimizers.begin(), result.minimizers.end(),
                        [&](const BranchSolution& m) {
                            return m.branch == s.branch &&
                                   close(m.assignment.beta, s.assignment.beta) &&
                                   close(m.assignment.gamma, s.assignment.gamma);
                        });
        if (!duplicate) result.minimizers.push_back(s);
    }
    if (alpha <= first_critical_alpha())
        result.branch_label = branch_name(Branch::embedded);
    else if (alpha < 0.5)
        result.branch_label = branch_name(Branch::kissing_unconstrained);
    else
        result.branch_label = branch_name(Branch::kissing_constrained);
    return result;
}

double gamma_perimeter(double alpha) {
    require_ratio(alpha);
    if (alpha <= first_critical_alpha()) return embedded_small_inside(alpha);
    if (alpha < 0.5) return kissing_flat(alpha);
    return 2.0 * std::sqrt(6.0 * (1.0 + alpha));
}

CriticalAlphas critical_alphas() {
    CriticalAlphas out;
    out.first_order = first_critical_alpha();
    out.second_order = 0.5;

    // Certify the closed form: bisect the difference of the two branches that
    // exchange optimality at the first transition.
    double lo = 0.1, hi = 0.3;
    auto diff = [](double x) {
        return embedded_small_inside(x) - kissing_flat(x);
    };
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (diff(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    out.first_order_numeric = 0.5 * (lo + hi);
    return out;
}

} // namespace l1db::kkt
