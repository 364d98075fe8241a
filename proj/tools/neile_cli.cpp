// neile: distances, metrics, interpolation and extensions on z^2 = w^3.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neile/commands.hpp"
#include "neile/errors.hpp"
#include "neile/report.hpp"

namespace {

int emit(const neile::CommandOutput& out, bool json) {
    std::cout << out.render(json);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace neile;

    CLI::App app{"Caratheodory distance, metric and extensions on the Neile parabola z^2 = w^3"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    GlobalOptions g;
    double tol = 0.0;
    app.add_flag("--json", g.json, "Machine-readable output (17 significant digits)");
    app.add_option("--seed", g.seed, "Seed for sampling")->capture_default_str();
    auto* tol_opt = app.add_option("--tol", tol, "Override the command's check tolerance");

    // distance
    std::string dist_kind;
    std::vector<std::string> dist_args;
    auto* distance = app.add_subcommand("distance", "Distance between two points of the variety");
    distance->add_option("kind", dist_kind, "caratheodory | mobius | kobayashi")
        ->required()
        ->check(CLI::IsMember({"caratheodory", "mobius", "kobayashi"}));
    distance->add_option("points", dist_args, "lambda delta, or z1 w1 z2 w2")->required();

    // metric
    std::vector<std::string> metric_args;
    auto* metric = app.add_subcommand("metric", "Caratheodory metric of a tangent vector");
    metric->add_option("args", metric_args, "point (lambda, or z w) followed by v1 v2")->required();

    // interpolate
    std::vector<std::string> interp_args;
    bool interp_solve = false;
    auto* interpolate = app.add_subcommand("interpolate", "Mixed problem f(z1)=w1, f(z2)=w2, f'(z3)=0");
    interpolate->add_option("values", interp_args, "z1 z2 z3 w1 w2")->required()->expected(5);
    interpolate->add_flag("--solve", interp_solve, "Construct a solution");

    // extend
    std::string blaschke_text, series_text, preset_text, points_file;
    bool general = false;
    int samples = 10000;
    auto* extend = app.add_subcommand("extend", "Bounded extension of a function on the variety to the bidisk");
    auto* o_b = extend->add_option("--blaschke", blaschke_text, "h = mu prod phi_a: \"mu;a1;a2;...\"");
    auto* o_s = extend->add_option("--series", series_text, "h = sum c_k l^k: \"c0;c1;...\" (c1 = 0)");
    auto* o_p = extend->add_option("--preset", preset_text, "lower-bound | zero");
    o_b->excludes(o_s)->excludes(o_p);
    o_s->excludes(o_p);
    extend->add_option("--points", points_file, "File with one point per line: lambda, or z w");
    extend->add_flag("--general", general, "Allow f(0,0) != 0 (bound 2 sqrt 2 + |f(0,0)|)");
    extend->add_option("--samples", samples, "Bidisk samples for the sup estimate")->capture_default_str();

    // grid
    std::string grid_l, grid_d, grid_out = "-";
    int grid_r = 100, grid_t = 128;
    auto* grid = app.add_subcommand("grid", "F on a polar grid of the closed disk, as CSV");
    grid->add_option("lambda", grid_l)->required();
    grid->add_option("delta", grid_d)->required();
    grid->add_option("radii", grid_r)->capture_default_str();
    grid->add_option("angles", grid_t)->capture_default_str();
    grid->add_option("-o,--out", grid_out, "Output file ('-' for stdout)")->capture_default_str();

    // verify
    std::string profile = "quick";
    std::uint64_t verify_seed = 0;
    std::vector<std::string> verify_json;
    bool inject = false;
    auto* verify = app.add_subcommand("verify", "Run the oracle suite");
    verify->add_option("profile", profile, "quick | thorough")
        ->check(CLI::IsMember({"quick", "thorough"}))
        ->capture_default_str();
    auto* verify_seed_opt = verify->add_option("seed", verify_seed, "Suite seed (default: --seed)");
    verify->add_option("--json", verify_json, "Write the report to FILE; without FILE print JSON")
        ->expected(0, 1)
        ->allow_extra_args(false);
    verify->add_flag("--inject-fault", inject, "Negative control with a deliberately wrong closed form")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (tol_opt->count() > 0) g.tol = tol;

    try {
        if (*distance) return emit(cmd_distance(dist_kind, dist_args, g), g.json);
        if (*metric) return emit(cmd_metric(metric_args, g), g.json);
        if (*interpolate) return emit(cmd_interpolate(interp_args, interp_solve, g), g.json);
        if (*extend) {
            ExtendOptions opts;
            if (!blaschke_text.empty()) {
                opts.function = parse_function("blaschke", blaschke_text);
                opts.function_text = "blaschke:" + blaschke_text;
            } else if (!series_text.empty()) {
                opts.function = parse_function("series", series_text);
                opts.function_text = "series:" + series_text;
            } else {
                const std::string p = preset_text.empty() ? "zero" : preset_text;
                opts.function = parse_function("preset", p);
                opts.function_text = "preset:" + p;
            }
            if (!points_file.empty()) opts.points = read_points(points_file);
            opts.general = general;
            opts.samples = samples;
            return emit(cmd_extend(opts, g), g.json);
        }
        if (*grid) return emit(cmd_grid(grid_l, grid_d, grid_r, grid_t, grid_out, g), g.json);
        if (*verify) {
            const std::uint64_t seed = verify_seed_opt->count() > 0 ? verify_seed : g.seed;
            std::optional<std::string> file;
            bool json = g.json;
            for (const auto& v : verify_json) {
                if (!v.empty()) file = v;
            }
            if (verify->count("--json") > 0 && !file) json = true;
            return emit(cmd_verify(profile, seed, inject, file, g), json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << " (margin " << e.margin() << ")\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
