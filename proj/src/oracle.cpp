#include "l1db/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "l1db/errors.hpp"
#include "l1db/kkt.hpp"
#include "l1db/reduce.hpp"

namespace l1db::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParamFloor = 1e-6;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// Nested grid refinement
// ---------------------------------------------------------------------------

struct GridOutcome {
    double best = kInf;
    FamilyConfig cfg;
    long long evaluations = 0;
};

// Evaluator: fills (perimeter, config) for a free-parameter point, returning
// false when the point is structurally infeasible.
template <typename EvalFn>
void run_nested(int dims, double lo, double hi, int levels, EvalFn&& eval,
                GridOutcome& out) {
    constexpr int kPts = 11;
    std::array<double, 4> wlo{}, whi{};
    for (int d = 0; d < dims; ++d) {
        wlo[d] = lo;
        whi[d] = hi;
    }
    std::array<double, 4> best_pt{};
    bool have_best = false;
    double chain_best = kInf;
    for (int level = 0; level < levels; ++level) {
        std::array<int, 4> it{};
        while (true) {
            std::array<double, 4> p{};
            for (int d = 0; d < dims; ++d)
                p[d] = wlo[d] + (whi[d] - wlo[d]) * it[d] / (kPts - 1);
            ++out.evaluations;
            double val = 0.0;
            FamilyConfig cfg;
            if (eval(p, val, cfg)) {
                if (val < chain_best) {
                    chain_best = val;
                    best_pt = p;
                    have_best = true;
                }
                if (val < out.best) {
                    out.best = val;
                    out.cfg = cfg;
                }
            }
            int d = 0;
            while (d < dims && ++it[d] == kPts) {
                it[d] = 0;
                ++d;
            }
            if (d == dims) break;
        }
        if (have_best) {
            for (int d = 0; d < dims; ++d) {
                const double half = (whi[d] - wlo[d]) / 20.0;
                wlo[d] = std::max(lo, best_pt[d] - half);
                whi[d] = std::min(hi, best_pt[d] + half);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Staircase sampling
// ---------------------------------------------------------------------------

// Young-diagram staircase: column right edges xs (increasing) and column
// heights hs (strictly decreasing), anchored at the origin.
struct Staircase {
    std::vector<double> xs;
    std::vector<double> hs;
};

double column_area(const Staircase& s) {
    double total = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
        total += (s.xs[i] - prev) * s.hs[i];
        prev = s.xs[i];
    }
    return total;
}

std::vector<Point> staircase_vertices(const Staircase& s, double ox,
                                      double oy) {
    const std::size_t k = s.xs.size();
    std::vector<Point> v;
    v.reserve(2 * k + 2);
    v.push_back({ox, oy});
    v.push_back({ox + s.xs[k - 1], oy});
    v.push_back({ox + s.xs[k - 1], oy + s.hs[k - 1]});
    for (std::size_t i = k - 1; i-- > 0;) {
        v.push_back({ox + s.xs[i], oy + s.hs[i + 1]});
        v.push_back({ox + s.xs[i], oy + s.hs[i]});
    }
    v.push_back({ox, oy + s.hs[0]});
    return v;
}

double shoelace(const std::vector<Point>& v) {
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return std::abs(twice) / 2.0;
}

void scale_staircase(Staircase& s, double sx, double sy) {
    for (double& x : s.xs) x *= sx;
    for (double& h : s.hs) h *= sy;
}

// Nudges the first column so the polygon area is exact to machine precision.
void fix_area(Staircase& s, double target) {
    for (int pass = 0; pass < 2; ++pass) {
        const double err = target - shoelace(staircase_vertices(s, 0.0, 0.0));
        s.hs[0] += err / s.xs[0];
    }
}

using Rng = std::mt19937_64;

double draw(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Staircase draw_staircase(Rng& rng, int k) {
    Staircase s;
    s.xs.resize(k);
    s.hs.resize(k);
    double x = 0.0;
    for (int i = 0; i < k; ++i) {
        x += draw(rng, 0.4, 1.0);
        s.xs[i] = x;
    }
    double h = draw(rng, 0.25, 0.8);
    for (int i = k - 1; i >= 0; --i) {
        s.hs[i] = h;
        h += draw(rng, 0.25, 0.8);
    }
    return s;
}

// Gentle profile (columns within 60% of the tallest) so the shape packs
// densely into a pocket.
Staircase draw_dense_staircase(Rng& rng, int k) {
    Staircase s;
    s.xs.resize(k);
    s.hs.resize(k);
    double x = 0.0;
    for (int i = 0; i < k; ++i) {
        x += draw(rng, 0.5, 1.0);
        s.xs[i] = x;
    }
    double h = 1.0;
    for (int i = 0; i < k; ++i) {
        s.hs[i] = h;
        h -= (0.4 / k) * draw(rng, 0.5, 1.0);
    }
    return s;
}

// Host with one thin tall column and short remaining columns, leaving a deep
// pocket at the upper right.
Staircase draw_pocket_host(Rng& rng, int k) {
    Staircase s;
    s.xs.resize(k);
    s.hs.resize(k);
    std::vector<double> widths(k);
    double total = 0.0;
    for (int i = 1; i < k; ++i) {
        widths[i] = draw(rng, 0.4, 1.0);
        total += widths[i];
    }
    widths[0] = 0.075 * total;
    double x = 0.0;
    for (int i = 0; i < k; ++i) {
        x += widths[i];
        s.xs[i] = x;
    }
    s.hs[0] = 1.0;
    double h = 0.10 + 0.04 * draw(rng, 0.0, 1.0);
    for (int i = k - 1; i >= 1; --i) {
        s.hs[i] = h;
        h += (0.15 / std::max(1, k - 1)) * draw(rng, 0.5, 1.5);
    }
    return s;
}

struct Placement {
    Staircase a;
    Staircase b;
    double bx = 0.0;  // guest translation
    double by = 0.0;
};

// Arrangement builders; each returns the two staircases (exact areas) and the
// guest offset, or throws to request a retry.
struct retry_draw {};

Placement build_disjoint(Rng& rng, int steps, double sa, double sb) {
    Placement p;
    p.a = draw_staircase(rng, steps);
    p.b = draw_staircase(rng, steps);
    const double la = std::sqrt(sa / column_area(p.a));
    scale_staircase(p.a, la, la);
    fix_area(p.a, sa);
    const double lb = std::sqrt(sb / column_area(p.b));
    scale_staircase(p.b, lb, lb);
    fix_area(p.b, sb);
    p.bx = p.a.xs.back() + 0.15 + 0.5 * draw(rng, 0.0, 1.0);
    p.by = (draw(rng, 0.0, 1.0) - 0.5) * p.a.hs[0];
    return p;
}

Placement build_two_corners(Rng& rng, int steps, double sa, double sb) {
    Placement p;
    p.a = draw_staircase(rng, steps);
    const double la = std::sqrt(sa / column_area(p.a));
    scale_staircase(p.a, la, la);
    fix_area(p.a, sa);
    p.b = draw_staircase(rng, steps);
    const double ratio = sb / column_area(p.b);
    if (steps == 1) {
        // Rectangles can only meet side to side: seat the guest flush on the
        // host's right wall.
        const double height = draw(rng, 0.35, 0.8) * p.a.hs[0];
        const double ly = height / p.b.hs[0];
        scale_staircase(p.b, ratio / ly, ly);
        fix_area(p.b, sb);
        p.bx = p.a.xs.back();
        p.by = draw(rng, 0.0, 1.0) * (p.a.hs[0] - p.b.hs[0]);
        return p;
    }
    // Seat the guest on the host's last (lowest) column so its box reaches
    // into the host box and out through the right side.
    const double floor_y = p.a.hs.back();
    const double pocket = p.a.hs[0] - floor_y;
    const double height = draw(rng, 0.4, 0.85) * pocket;
    const double ly = height / p.b.hs[0];
    scale_staircase(p.b, ratio / ly, ly);
    fix_area(p.b, sb);
    const double guest_w = p.b.xs.back();
    const double last_w = p.a.xs.back() - (steps > 1 ? p.a.xs[steps - 2] : 0.0);
    const double inset =
        draw(rng, 0.3, 0.9) * std::min(last_w * 0.9, guest_w * 0.6);
    p.bx = p.a.xs.back() - inset;
    p.by = floor_y;
    return p;
}

Placement build_one_corner(Rng& rng, int steps, double sa, double sb) {
    Placement p;
    p.a = draw_staircase(rng, steps);
    const double la = std::sqrt(sa / column_area(p.a));
    scale_staircase(p.a, la, la);
    fix_area(p.a, sa);
    p.b = draw_staircase(rng, steps);
    const double ratio = sb / column_area(p.b);
    const double floor_y = p.a.hs.back();
    const double reach = p.a.hs[0] - floor_y;  // zero for a rectangle host
    const double height = reach + draw(rng, 0.3, 0.8) * p.a.hs[0];
    const double ly = height / p.b.hs[0];
    scale_staircase(p.b, ratio / ly, ly);
    fix_area(p.b, sb);
    const double guest_w = p.b.xs.back();
    const double last_w = p.a.xs.back() - (steps > 1 ? p.a.xs[steps - 2] : 0.0);
    const double inset =
        draw(rng, 0.3, 0.9) * std::min(last_w * 0.9, guest_w * 0.6);
    p.bx = p.a.xs.back() - inset;
    p.by = floor_y;
    return p;
}

Placement build_contained(Rng& rng, int steps, double sa, double sb) {
    const int host_steps = std::max(2, steps);
    Placement p;
    p.a = draw_pocket_host(rng, host_steps);
    const double la = std::sqrt(sa / column_area(p.a));
    scale_staircase(p.a, la, la);
    fix_area(p.a, sa);
    p.b = draw_dense_staircase(rng, steps);
    const double ratio = sb / column_area(p.b);
    const double pw = p.a.xs.back() - p.a.xs[0];
    const double ph = p.a.hs[0] - p.a.hs[1];
    const double box_needed = ratio * p.b.xs.back() * p.b.hs[0];
    if (box_needed > 0.72 * pw * ph) throw retry_draw{};
    const double ly_max = 0.85 * ph / p.b.hs[0];
    const double ly_min = ratio * p.b.xs.back() / (0.85 * pw);
    const double ly = ly_min + draw(rng, 0.0, 1.0) * (ly_max - ly_min);
    scale_staircase(p.b, ratio / ly, ly);
    fix_area(p.b, sb);
    const double slack_x = pw - p.b.xs.back();
    const double slack_y = ph - p.b.hs[0];
    if (slack_x <= 0.0 || slack_y <= 0.0) throw retry_draw{};
    p.bx = p.a.xs[0] + slack_x * draw(rng, 0.1, 0.9);
    p.by = p.a.hs[1] + slack_y * draw(rng, 0.1, 0.9);
    return p;
}

Containment intended_case(std::uint64_t seed) {
    switch (seed % 4) {
        case 0: return Containment::disjoint_boxes;
        case 1: return Containment::two_corners;
        case 2: return Containment::one_corner;
        default: return Containment::contained;
    }
}

} // namespace

SearchReport grid_search_family(double alpha, int levels) {
    if (!(alpha > 0.0 && alpha <= 1.0 + kEps))
        throw domain_error("alpha must lie in (0, 1]");
    if (levels < 1) throw domain_error("levels must be >= 1");
    const double reference = 4.0 + 2.0 * std::sqrt(2.0 * alpha);
    const double hi = reference / 2.0;
    GridOutcome out;
    for (const VolumeAssignment& asg :
         {assignment_one_alpha(alpha), assignment_alpha_one(alpha)}) {
        const double beta = asg.beta;
        const double gamma = asg.gamma;
        run_nested(
            2, kParamFloor, hi, levels,
            [&](const std::array<double, 4>& p, double& val, FamilyConfig& cfg) {
                const double a = p[0], c = p[1];
                const double b = beta / a, d = gamma / c;
                if (b < d - kEps) return false;
                val = 2.0 * (a + b + c) + d;
                cfg = kissing_config(a, b, c, d);
                return true;
            },
            out);
        run_nested(
            2, kParamFloor, hi, levels,
            [&](const std::array<double, 4>& p, double& val, FamilyConfig& cfg) {
                const double a = p[0], c = p[1];
                const double b = beta / a, d = (beta + gamma) / c;
                if (c < a - kEps || d < b - kEps) return false;
                val = 2.0 * (c + d) + a + b;
                cfg = embedded_config(a, b, c, d);
                return true;
            },
            out);
        run_nested(
            4, kParamFloor, hi, levels,
            [&](const std::array<double, 4>& p, double& val, FamilyConfig& cfg) {
                const double a = p[0], c = p[1], d = p[2], e = p[3];
                const double b = beta / a;
                const double f = (gamma - c * d) / (c + e);
                if (f <= kEps) return false;
                if (b < d - kEps || e > a + kEps) return false;
                val = 2.0 * (a + b + c + f) + d + e;
                cfg = general_config(a, b, c, d, e, f);
                return true;
            },
            out);
    }
    SearchReport rep;
    rep.alpha = alpha;
    rep.best_config = out.cfg;
    rep.best_perimeter = out.best;
    rep.analytic_perimeter = kkt::gamma_perimeter(alpha);
    rep.gap = rep.best_perimeter - rep.analytic_perimeter;
    rep.evaluations = out.evaluations;
    return rep;
}

BubblePair sample_staircase_pair(const StaircaseSpec& spec) {
    if (spec.steps < 1) throw domain_error("steps must be >= 1");
    if (spec.target_areas.first <= kEps || spec.target_areas.second <= kEps)
        throw domain_error("target areas must be positive");
    const double sa = spec.target_areas.first;
    const double sb = spec.target_areas.second;
    const Containment want = intended_case(spec.seed);
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            Placement p;
            switch (want) {
                case Containment::disjoint_boxes:
                    p = build_disjoint(rng, spec.steps, sa, sb);
                    break;
                case Containment::two_corners:
                    p = build_two_corners(rng, spec.steps, sa, sb);
                    break;
                case Containment::one_corner:
                    p = build_one_corner(rng, spec.steps, sa, sb);
                    break;
                default:
                    p = build_contained(rng, spec.steps, sa, sb);
                    break;
            }
            RectilinearPolygon host(staircase_vertices(p.a, 0.0, 0.0));
            RectilinearPolygon guest(staircase_vertices(p.b, p.bx, p.by));
            BubblePair pair(host, guest);
            if (std::abs(pair.first_area() - sa) > 1e-9) continue;
            if (std::abs(pair.second_area() - sb) > 1e-9) continue;
            if (classify(pair).kind != want) continue;
            return pair;
        } catch (const retry_draw&) {
            continue;
        } catch (const error&) {
            continue;
        }
    }
    throw generation_error(
        "no valid staircase placement found after 64 attempts (seed " +
        std::to_string(spec.seed) + ")");
}

LowerBoundReport certify_lower_bound(double alpha, int samples,
                                     std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha <= 1.0 + kEps))
        throw domain_error("alpha must lie in (0, 1]");
    LowerBoundReport rep;
    rep.alpha = alpha;
    rep.samples = samples;
    rep.seed = seed;
    rep.min_gap = kInf;
    const double analytic = kkt::gamma_perimeter(alpha);
    auto note = [&rep](const std::string& msg) {
        ++rep.violations;
        if (rep.messages.size() < 8) rep.messages.push_back(msg);
    };
    for (int i = 0; i < samples; ++i) {
        StaircaseSpec sp;
        sp.seed = seed + static_cast<std::uint64_t>(i);
        sp.steps = 1 + i % 4;
        sp.target_areas = {1.0, alpha};
        std::optional<BubblePair> pair;
        try {
            pair.emplace(sample_staircase_pair(sp));
        } catch (const generation_error&) {
            ++rep.skipped;
            continue;
        }
        const double rho = pair->perimeter();
        const double gap = rho - analytic;
        rep.min_gap = std::min(rep.min_gap, gap);
        if (gap < -1e-9)
            note("sampled pair beats the closed form at alpha=" + fmt(alpha) +
                 " by " + fmt(-gap));
        try {
            const Reduction red = reduce(*pair);
            if (red.output_perimeter > rho + 1e-9)
                note("reduction increased perimeter: " +
                     fmt(red.output_perimeter) + " > " + fmt(rho));
            const double lo = std::min(red.assignment.beta,
                                       red.assignment.gamma);
            const double hi = std::max(red.assignment.beta,
                                       red.assignment.gamma);
            if (std::abs(hi - 1.0) > 1e-9 || std::abs(lo - alpha) > 1e-9)
                note("reduction changed areas to {" + fmt(red.assignment.beta) +
                     ", " + fmt(red.assignment.gamma) + "}");
            if (analytic > red.output_perimeter + 1e-9)
                note("reduced configuration beats the closed form by " +
                     fmt(analytic - red.output_perimeter));
        } catch (const unsupported_case_error&) {
            ++rep.skipped;
        }
    }
    if (rep.min_gap == kInf) rep.min_gap = 0.0;
    return rep;
}

KinkReport detect_kinks(double grid_step, double fd_step) {
    if (!(fd_step > 0.0 && fd_step < grid_step &&
          grid_step < kkt::first_critical_alpha()))
        throw domain_error(
            "need 0 < fd_step < grid_step < the first critical ratio");
    KinkReport rep;
    rep.grid_step = grid_step;
    rep.fd_step = fd_step;

    std::vector<double> xs, d1, d2;
    for (int i = 1;; ++i) {
        const double x = i * grid_step;
        if (x + fd_step > 1.0) break;
        const double gm = kkt::gamma_perimeter(x - fd_step);
        const double g0 = kkt::gamma_perimeter(x);
        const double gp = kkt::gamma_perimeter(x + fd_step);
        xs.push_back(x);
        d1.push_back((gp - gm) / (2.0 * fd_step));
        d2.push_back((gp - 2.0 * g0 + gm) / (fd_step * fd_step));
    }

    // Jump sequence of a sampled derivative, with the flagged jumps clustered
    // into kink locations.  A jump is a kink candidate when it exceeds 10x
    // the surrounding background (nearby jumps, both sides required, the
    // immediate neighbors excluded since a genuine kink smears into them).
    auto locate = [&xs](const std::vector<double>& der, double floor) {
        const std::size_t m = der.size() - 1;
        std::vector<double> jump(m), mid(m);
        for (std::size_t i = 0; i < m; ++i) {
            jump[i] = std::abs(der[i + 1] - der[i]);
            mid[i] = (xs[i] + xs[i + 1]) / 2.0;
        }
        std::vector<std::size_t> flagged;
        for (std::size_t i = 4; i + 4 < m; ++i) {
            double background = floor;
            for (std::size_t j = i - 4; j <= i + 4; ++j) {
                if (j + 2 > i && j < i + 2) continue;  // skip i-1, i, i+1
                background = std::max(background, jump[j]);
            }
            if (jump[i] > 10.0 * background) flagged.push_back(i);
        }
        std::vector<double> kinks;
        std::size_t pos = 0;
        while (pos < flagged.size()) {
            std::size_t end = pos;
            while (end + 1 < flagged.size() &&
                   flagged[end + 1] - flagged[end] <= 2)
                ++end;
            double wsum = 0.0, loc = 0.0;
            for (std::size_t q = pos; q <= end; ++q) {
                wsum += jump[flagged[q]];
                loc += jump[flagged[q]] * mid[flagged[q]];
            }
            kinks.push_back(loc / wsum);
            pos = end + 1;
        }
        return kinks;
    };

    rep.first_order = locate(d1, 1e-6);
    // A slope kink also spikes the curvature samples around it; report only
    // curvature jumps away from every detected slope kink.
    for (double k2 : locate(d2, 1e-3)) {
        bool near_first = false;
        for (double k1 : rep.first_order)
            if (std::abs(k2 - k1) < 5.0 * grid_step) near_first = true;
        if (!near_first) rep.second_order.push_back(k2);
    }
    return rep;
}

SuiteResult verify_kkt(int samples, std::uint64_t seed) {
    SuiteResult res;
    res.suite = "kkt";
    auto check = [&res](bool ok, const std::string& msg) {
        ++res.checks;
        if (!ok && res.failures.size() < 16) res.failures.push_back(msg);
    };

    const struct {
        double alpha;
        double perimeter;
    } table[] = {
        {0.0125, 4.2485292}, {0.1, 4.8276909}, {0.25, 5.4142136},
        {0.5, 6.0},          {0.75, 6.4807407}, {1.0, 6.9282032},
    };
    for (const auto& row : table)
        check(std::abs(kkt::gamma_perimeter(row.alpha) - row.perimeter) <=
                  5e-7,
              "curve value off at alpha=" + fmt(row.alpha));
    check(std::abs(kkt::per_assignment_minimum(
                       0.0125, assignment_one_alpha(0.0125))
                       .perimeter -
                   4.3162278) <= 5e-7,
          "1:alpha curve off at alpha=0.0125");

    const kkt::CriticalAlphas crit = kkt::critical_alphas();
    check(std::abs(crit.first_order - 0.18729571552886431) <= 1e-12,
          "first critical ratio off");
    check(std::abs(crit.first_order - crit.first_order_numeric) <= 1e-12,
          "bisection disagrees with the closed form");
    check(crit.second_order == 0.5, "second critical ratio off");
    const kkt::GammaResult at_kink = kkt::global_minimizer(crit.first_order);
    check(at_kink.minimizers.size() >= 2,
          "expected at least two minimizers at the first critical ratio");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(1e-6, 1.0);
    for (int i = 0; i < samples; ++i) {
        const double alpha = unit(rng);
        const kkt::GammaResult g = kkt::global_minimizer(alpha);
        const double curve = kkt::gamma_perimeter(alpha);
        check(std::abs(g.perimeter - curve) <= 1e-9,
              "curve vs minimizer mismatch at alpha=" + fmt(alpha));
        const double red =
            kkt::per_assignment_minimum(alpha, assignment_one_alpha(alpha))
                .perimeter;
        const double blue =
            kkt::per_assignment_minimum(alpha, assignment_alpha_one(alpha))
                .perimeter;
        check(std::min(red, blue) >= curve - 1e-9 &&
                  std::min(red, blue) <= curve + 1e-9,
              "assignment minima do not bracket the curve at alpha=" +
                  fmt(alpha));
        for (const kkt::BranchSolution& s : g.minimizers)
            check(s.valid && std::abs(s.perimeter - g.perimeter) <= 1e-9,
                  "minimizer list inconsistent at alpha=" + fmt(alpha));
    }
    res.passed = res.failures.empty();
    return res;
}

SuiteResult verify_reduce(int samples, std::uint64_t seed) {
    SuiteResult res;
    res.suite = "reduce";
    auto check = [&res](bool ok, const std::string& msg) {
        ++res.checks;
        if (!ok && res.failures.size() < 16) res.failures.push_back(msg);
    };

    // A realized kissing configuration must reduce to itself.
    {
        const FamilyConfig cfg =
            kissing_config(1.0, 1.0, std::sqrt(0.15), std::sqrt(0.6));
        const Reduction red = reduce(realize(cfg));
        check(red.containment.kind == Containment::two_corners,
              "kissing realization not classified as a side contact");
        const bool same = red.config.shape == FamilyShape::kissing &&
                          std::abs(red.config.a - cfg.a) <= 1e-9 &&
                          std::abs(red.config.b - cfg.b) <= 1e-9 &&
                          std::abs(red.config.c - cfg.c) <= 1e-9 &&
                          std::abs(red.config.d - cfg.d) <= 1e-9;
        check(same, "kissing realization is not a fixed point");
    }
    // Two far-apart unit squares collapse to touching unit squares.
    {
        const RectilinearPolygon one(
            {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
        const RectilinearPolygon two(
            {{2.5, 0.0}, {3.5, 0.0}, {3.5, 1.0}, {2.5, 1.0}});
        const Reduction red = reduce(BubblePair(one, two));
        check(red.config.shape == FamilyShape::kissing &&
                  std::abs(red.output_perimeter - 7.0) <= 1e-9,
              "disjoint unit squares did not reduce to touching squares");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int i = 0; i < samples; ++i) {
        const double alpha = unit(rng);
        StaircaseSpec sp;
        sp.seed = seed + 1000 + static_cast<std::uint64_t>(i);
        sp.steps = 1 + i % 4;
        sp.target_areas = {1.0, alpha};
        const BubblePair pair = sample_staircase_pair(sp);
        const double rho = pair.perimeter();
        const Reduction red = reduce(pair);
        check(red.output_perimeter <= rho + 1e-9,
              "reduction increased perimeter at alpha=" + fmt(alpha));
        const double lo = std::min(red.assignment.beta, red.assignment.gamma);
        const double hi = std::max(red.assignment.beta, red.assignment.gamma);
        check(std::abs(hi - 1.0) <= 1e-9 && std::abs(lo - alpha) <= 1e-9,
              "reduction changed the areas at alpha=" + fmt(alpha));
        check(kkt::gamma_perimeter(alpha) <= red.output_perimeter + 1e-9,
              "reduced configuration beats the closed form at alpha=" +
                  fmt(alpha));
    }
    res.passed = res.failures.empty();
    return res;
}

SuiteResult verify_grid(int samples, std::uint64_t seed, int levels) {
    SuiteResult res;
    res.suite = "oracle";
    auto check = [&res](bool ok, const std::string& msg) {
        ++res.checks;
        if (!ok && res.failures.size() < 16) res.failures.push_back(msg);
    };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    for (int i = 1; i <= samples; ++i) {
        double alpha = (i - jitter(rng) * 0.5) / samples;
        alpha = std::min(1.0, std::max(1e-3, alpha));
        const SearchReport rep = grid_search_family(alpha, levels);
        check(rep.gap >= -1e-9,
              "search undercut the closed form at alpha=" + fmt(alpha));
        if (levels >= 6)
            check(rep.gap <= 1e-5,
                  "search missed the closed form at alpha=" + fmt(alpha) +
                      " (gap " + fmt(rep.gap) + ")");
    }
    res.passed = res.failures.empty();
    return res;
}

SuiteResult verify_kinks() {
    SuiteResult res;
    res.suite = "kinks";
    auto check = [&res](bool ok, const std::string& msg) {
        ++res.checks;
        if (!ok && res.failures.size() < 16) res.failures.push_back(msg);
    };
    const KinkReport rep = detect_kinks(5e-5, 1e-5);
    check(rep.first_order.size() == 1,
          "expected exactly one slope kink, found " +
              std::to_string(rep.first_order.size()));
    check(rep.second_order.size() == 1,
          "expected exactly one curvature kink, found " +
              std::to_string(rep.second_order.size()));
    if (rep.first_order.size() == 1)
        check(std::abs(rep.first_order[0] - kkt::first_critical_alpha()) <=
                  1e-4,
              "slope kink located off the critical ratio");
    if (rep.second_order.size() == 1)
        check(std::abs(rep.second_order[0] - 0.5) <= 1e-4,
              "curvature kink located off 1/2");
    res.passed = res.failures.empty();
    return res;
}

} // namespace l1db::oracle
