#include "l1db/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "l1db/errors.hpp"
#include "l1db/family.hpp"
#include "l1db/json_io.hpp"
#include "l1db/kkt.hpp"
#include "l1db/oracle.hpp"
#include "l1db/reduce.hpp"
#include "l1db/svg.hpp"

namespace l1db::cli {
namespace {

std::string human(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string machine(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// The minimizer whose branch matches the piece label, so the reported
// parameters stay coherent with the branch column even at the crossover
// ratio where several branches tie.
const kkt::BranchSolution* display_solution(const kkt::GammaResult& g) {
    for (const kkt::BranchSolution& s : g.minimizers)
        if (kkt::branch_name(s.branch) == g.branch_label) return &s;
    return &g.minimizers.front();
}

void print_config_lines(std::ostream& out, const FamilyConfig& cfg) {
    out << "a " << human(cfg.a) << "\n";
    out << "b " << human(cfg.b) << "\n";
    out << "c " << human(cfg.c) << "\n";
    out << "d " << human(cfg.d) << "\n";
    if (cfg.shape == FamilyShape::general) {
        out << "e " << human(cfg.e) << "\n";
        out << "f " << human(cfg.f) << "\n";
    }
}

struct SweepRow {
    double alpha = 0.0;
    double perimeter = 0.0;
    std::string branch;
    std::string assignment;
    std::optional<FamilyConfig> config;
};

// alpha = 0 appears in sweeps as the closed-form limit: both curves start at
// perimeter 4 with degenerate (empty) parameters.
SweepRow global_row(double alpha) {
    if (alpha <= kEps)
        return {0.0, 4.0, "Embedded", "alpha:1", std::nullopt};
    const kkt::GammaResult g = kkt::global_minimizer(alpha);
    const kkt::BranchSolution* s = display_solution(g);
    return {alpha, g.perimeter, g.branch_label, assignment_name(s->assignment),
            s->config};
}

SweepRow assignment_row(double alpha, bool first_carries_one) {
    if (alpha <= kEps) {
        if (first_carries_one)
            return {0.0, 4.0, "KissingUnconstrained", "1:alpha", std::nullopt};
        return {0.0, 4.0, "Embedded", "alpha:1", std::nullopt};
    }
    const VolumeAssignment asg = first_carries_one
                                     ? assignment_one_alpha(alpha)
                                     : assignment_alpha_one(alpha);
    const kkt::BranchSolution s = kkt::per_assignment_minimum(alpha, asg);
    // The assignment column names the curve being traced, even where the
    // winning configuration is a mirrored kissing pair from the swapped
    // assignment.
    return {alpha, s.perimeter, kkt::branch_name(s.branch),
            first_carries_one ? "1:alpha" : "alpha:1", s.config};
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "alpha,perimeter,branch,assignment,a,b,c,d,e,f\n";
    for (const SweepRow& r : rows) {
        std::array<std::string, 6> p;
        if (r.config) {
            p[0] = machine(r.config->a);
            p[1] = machine(r.config->b);
            p[2] = machine(r.config->c);
            p[3] = machine(r.config->d);
            if (r.config->shape == FamilyShape::general) {
                p[4] = machine(r.config->e);
                p[5] = machine(r.config->f);
            }
        }
        out << machine(r.alpha) << "," << machine(r.perimeter) << ","
            << r.branch << "," << r.assignment;
        for (const std::string& field : p) out << "," << field;
        out << "\n";
    }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json row{{"alpha", r.alpha},
                           {"perimeter", r.perimeter},
                           {"branch", r.branch},
                           {"assignment", r.assignment}};
        row["config"] = r.config ? jsonio::config_json(*r.config)
                                 : nlohmann::json(nullptr);
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"optimal double bubbles in the taxicab plane"};
    app.name("l1bubble");
    app.require_subcommand(1);

    double eval_alpha = 0.0;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "closed-form minimum at one area ratio");
    eval_cmd->add_option("--alpha", eval_alpha, "area ratio in (0,1]")
        ->required();

    double sweep_from = 0.0, sweep_to = 1.0;
    int sweep_steps = 0;
    bool per_assignment = false;
    std::string sweep_format;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "tabulate the minimum over a ratio range");
    sweep_cmd->add_option("--from", sweep_from, "first ratio")->required();
    sweep_cmd->add_option("--to", sweep_to, "last ratio")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "number of rows")
        ->required();
    sweep_cmd->add_flag("--per-assignment", per_assignment,
                        "one row per area assignment instead of the minimum");
    sweep_cmd->add_option("--format", sweep_format, "csv or json")
        ->required()
        ->check(CLI::IsMember({"csv", "json"}));

    double shape_alpha = 0.0;
    std::string svg_path;
    bool shape_json = false;
    CLI::App* shape_cmd = app.add_subcommand(
        "shape", "the minimizing configuration at one ratio");
    shape_cmd->add_option("--alpha", shape_alpha, "area ratio in (0,1]")
        ->required();
    shape_cmd->add_option("--svg", svg_path, "write an SVG rendering here");
    shape_cmd->add_flag("--json", shape_json,
                        "print the configuration and polygons as JSON");

    std::string reduce_input;
    bool reduce_normalize = false;
    CLI::App* reduce_cmd = app.add_subcommand(
        "reduce", "map a polygon pair into the configuration family");
    reduce_cmd->add_option("--input", reduce_input, "pair JSON file")
        ->required();
    reduce_cmd->add_flag("--normalize", reduce_normalize,
                         "rescale the larger cell to area 1 first");

    std::string suite;
    int verify_samples = 100;
    std::uint64_t verify_seed = 1;
    int verify_levels = 6;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run one self-check suite");
    verify_cmd->add_option("--suite", suite, "kkt, reduce, oracle, or kinks")
        ->required()
        ->check(CLI::IsMember({"kkt", "reduce", "oracle", "kinks"}));
    verify_cmd->add_option("--samples", verify_samples, "random draws");
    verify_cmd->add_option("--seed", verify_seed, "random seed");
    verify_cmd->add_option("--levels", verify_levels, "grid refinement depth");

    CLI::App* critical_cmd = app.add_subcommand(
        "critical", "the two ratios where the minimizing branch changes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (eval_cmd->parsed()) {
            const kkt::GammaResult g = kkt::global_minimizer(eval_alpha);
            const kkt::BranchSolution* s = display_solution(g);
            out << "alpha " << human(g.alpha) << "\n";
            out << "perimeter " << human(g.perimeter) << "\n";
            out << "branch " << g.branch_label << "\n";
            out << "assignment " << assignment_name(s->assignment) << "\n";
            if (s->config) print_config_lines(out, *s->config);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            if (sweep_steps < 1)
                throw domain_error("steps must be >= 1");
            if (sweep_from < 0.0 || sweep_to > 1.0 + kEps ||
                sweep_from > sweep_to)
                throw domain_error(
                    "sweep range must satisfy 0 <= from <= to <= 1");
            std::vector<SweepRow> rows;
            for (int i = 0; i < sweep_steps; ++i) {
                const double alpha =
                    sweep_steps == 1
                        ? sweep_from
                        : sweep_from + (sweep_to - sweep_from) * i /
                                           (sweep_steps - 1);
                if (per_assignment) {
                    rows.push_back(assignment_row(alpha, true));
                    rows.push_back(assignment_row(alpha, false));
                } else {
                    rows.push_back(global_row(alpha));
                }
            }
            if (sweep_format == "csv")
                write_csv(out, rows);
            else
                write_json(out, rows);
            return 0;
        }
        if (shape_cmd->parsed()) {
            const kkt::GammaResult g = kkt::global_minimizer(shape_alpha);
            const kkt::BranchSolution* s = display_solution(g);
            if (!s->config)
                throw domain_error("no configuration available");
            const FamilyConfig& cfg = *s->config;
            if (shape_json) {
                nlohmann::json j{{"alpha", g.alpha},
                                 {"perimeter", g.perimeter},
                                 {"branch", g.branch_label},
                                 {"config", jsonio::config_json(cfg)},
                                 {"pair", jsonio::pair_json(realize(cfg))}};
                out << j.dump(2) << "\n";
            } else {
                out << "alpha " << human(g.alpha) << "\n";
                out << "perimeter " << human(g.perimeter) << "\n";
                out << "branch " << g.branch_label << "\n";
                print_config_lines(out, cfg);
            }
            if (!svg_path.empty()) {
                std::ofstream file(svg_path, std::ios::binary);
                if (!file)
                    throw input_error("cannot open " + svg_path +
                                      " for writing");
                file << render_svg(cfg);
                if (!shape_json)
                    out << "wrote " << svg_path << "\n";
            }
            return 0;
        }
        if (reduce_cmd->parsed()) {
            std::ifstream file(reduce_input, std::ios::binary);
            if (!file)
                throw input_error("cannot read " + reduce_input);
            nlohmann::json doc;
            try {
                file >> doc;
            } catch (const nlohmann::json::exception& e) {
                throw input_error(std::string("invalid JSON: ") + e.what());
            }
            BubblePair pair = jsonio::pair_from_json(doc);
            std::optional<double> scale;
            if (reduce_normalize) {
                auto [normalized, factor] = normalize_scale(pair);
                pair = normalized;
                scale = factor;
            }
            nlohmann::json rep = jsonio::reduction_json(reduce(pair));
            if (scale) rep["scale"] = *scale;
            out << rep.dump(2) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            oracle::SuiteResult res;
            if (suite == "kkt")
                res = oracle::verify_kkt(verify_samples, verify_seed);
            else if (suite == "reduce")
                res = oracle::verify_reduce(verify_samples, verify_seed);
            else if (suite == "oracle")
                res = oracle::verify_grid(verify_samples, verify_seed,
                                          verify_levels);
            else
                res = oracle::verify_kinks();
            out << jsonio::suite_result_json(res).dump(2) << "\n";
            return res.passed ? 0 : 2;
        }
        if (critical_cmd->parsed()) {
            const kkt::CriticalAlphas crit = kkt::critical_alphas();
            out << "first-order " << human(crit.first_order) << "\n";
            out << "second-order " << human(crit.second_order) << "\n";
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace l1db::cli
