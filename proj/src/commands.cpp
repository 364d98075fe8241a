#include "neile/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "neile/caratheodory.hpp"
#include "neile/errors.hpp"
#include "neile/extension.hpp"
#include "neile/interpolation.hpp"
#include "neile/oracle.hpp"
#include "neile/random.hpp"
#include "neile/report.hpp"

namespace neile {

using nlohmann::json;

namespace {

std::string cx(Complex z) { return format_complex(z); }

json base_record(const std::string& command, json inputs) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"outputs", json::object()},
                {"tolerances", json::object()},
                {"version", kVersion}};
}

std::string h6(double x) { return format_real(x, 6); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

json point_json(const NeilePoint& x) {
    return json{{"z", cx(x.z())}, {"w", cx(x.w())}, {"lambda", cx(x.lambda())}};
}

std::string describe(const BlaschkeProduct& b) {
    std::string s = "Blaschke order " + std::to_string(b.order()) + ", mu " + format_complex_human(b.mu()) +
                    ", zeros [";
    for (std::size_t i = 0; i < b.zeros().size(); ++i) {
        s += (i ? ", " : "") + format_complex_human(b.zeros()[i]);
    }
    return s + "]";
}

json blaschke_json(const BlaschkeProduct& b) {
    json zeros = json::array();
    for (const auto& z : b.zeros()) zeros.push_back(cx(z));
    return json{{"mu", cx(b.mu())}, {"zeros", zeros}, {"order", b.order()}};
}

json automorphism_json(const DiskAutomorphism& a) {
    return json{{"mu", cx(a.mu())}, {"center", cx(a.center())}};
}

}  // namespace

std::string CommandOutput::render(bool as_json) const {
    return as_json ? record.dump(2) + "\n" : text;
}

NeilePoint parse_point(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1) {
        const Complex l = parse_complex(tokens[0]);
        if (!in_open_disk(l)) throw DomainError("parameter " + tokens[0] + " is not in the open unit disk");
        return NeilePoint::from_parameter(l);
    }
    if (tokens.size() == 2) {
        return NeilePoint::from_coordinates(parse_complex(tokens[0]), parse_complex(tokens[1]));
    }
    throw ParseError("a point is one parameter or a (z w) pair");
}

FlatOriginFunction parse_function(const std::string& kind, const std::string& text) {
    if (kind == "preset") {
        if (text == "lower-bound") return lower_bound_function();
        if (text == "zero") return FlatOriginFunction::series({0.0});
        throw ParseError("unknown preset '" + text + "'");
    }
    const auto parts = split(text, ';');
    if (parts.empty()) throw ParseError("empty function description");
    std::vector<Complex> values;
    for (const auto& p : parts) values.push_back(parse_complex(p));
    if (kind == "blaschke") {
        std::vector<UnitDiskPoint> zeros;
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (!in_open_disk(values[i])) throw DomainError("Blaschke zero " + parts[i] + " is not in the disk");
            zeros.emplace_back(values[i]);
        }
        return FlatOriginFunction::blaschke(values[0], std::move(zeros));
    }
    if (kind == "series") return FlatOriginFunction::series(std::move(values));
    throw ParseError("unknown function kind '" + kind + "'");
}

std::vector<NeilePoint> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open points file '" + path + "'");
    std::vector<NeilePoint> points;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::string> tokens;
        for (std::string t; is >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        points.push_back(parse_point(tokens));
    }
    return points;
}

CommandOutput cmd_distance(const std::string& kind, const std::vector<std::string>& args,
                           const GlobalOptions& g) {
    (void)g;
    if (args.size() != 2 && args.size() != 4) throw ParseError("distance takes two points (lambda or z w each)");
    const std::size_t half = args.size() / 2;
    const NeilePoint x = parse_point({args.begin(), args.begin() + half});
    const NeilePoint y = parse_point({args.begin() + half, args.end()});
    CommandOutput out;
    out.record = base_record("distance", json{{"kind", kind}, {"x", point_json(x)}, {"y", point_json(y)}});
    auto& o = out.record["outputs"];
    std::ostringstream text;
    if (kind == "kobayashi") {
        const double k = kobayashi_distance(x, y);
        o["kobayashi"] = k;
        text << "kobayashi " << h6(k) << "\n";
    } else if (kind == "caratheodory" || kind == "mobius") {
        const Complex l = x.lambda(), d = y.lambda();
        double cstar;
        if (l == d) {
            cstar = 0.0;
            o["case"] = "equal";
        } else if (l == Complex(0.0) || d == Complex(0.0)) {
            cstar = caratheodory_mobius(l, d);
            o["case"] = "zero";
            o["extremal_function"] = blaschke_json(BlaschkeProduct(1.0, {0.0, 0.0}));
        } else {
            const ExtremalData e = extremal_parameters(l, d);
            cstar = e.mobius_value;
            o["case"] = "generic";
            o["alpha0"] = cx(e.alpha0);
            o["regime"] = to_string(e.regime);
            o["extremal_alpha"] = cx(e.extremal_alpha);
            o["extremal_function"] = blaschke_json(extremal_function(l, d));
            text << "regime " << to_string(e.regime) << ", alpha0 " << format_complex_human(e.alpha0) << "\n"
                 << "extremal function " << describe(extremal_function(l, d)) << "\n";
        }
        o["mobius"] = cstar;
        o["caratheodory"] = std::atanh(cstar);
        std::string head = "c* " + h6(cstar) + "\n";
        if (kind == "caratheodory") head += "c " + h6(std::atanh(cstar)) + "\n";
        out.text = head + text.str();
        return out;
    } else {
        throw ParseError("unknown distance kind '" + kind + "'");
    }
    out.text = text.str();
    return out;
}

CommandOutput cmd_metric(const std::vector<std::string>& args, const GlobalOptions& g) {
    (void)g;
    if (args.size() != 3 && args.size() != 4) throw ParseError("metric takes a point (lambda or z w) and v1 v2");
    const NeilePoint x = parse_point({args.begin(), args.end() - 2});
    const Complex v1 = parse_complex(args[args.size() - 2]), v2 = parse_complex(args.back());
    const double e = caratheodory_metric(x, v1, v2);
    CommandOutput out;
    out.record = base_record("metric", json{{"point", point_json(x)}, {"v1", cx(v1)}, {"v2", cx(v2)}});
    out.record["outputs"]["metric"] = e;
    out.record["tolerances"]["colinearity"] = 1e-9;
    out.text = "metric " + h6(e) + "\n";
    return out;
}

CommandOutput cmd_interpolate(const std::vector<std::string>& args, bool solve_flag, const GlobalOptions& g) {
    if (args.size() != 5) throw ParseError("interpolate takes z1 z2 z3 w1 w2");
    Complex v[5];
    for (int i = 0; i < 5; ++i) {
        v[i] = parse_complex(args[i]);
        if (!in_open_disk(v[i])) throw DomainError("argument " + args[i] + " is not in the open unit disk");
    }
    const MixedProblem p(v[0], v[1], v[2], v[3], v[4]);
    const double tol = g.tol.value_or(kExtremalTolerance);
    const Feasibility f = feasible(p);
    CommandOutput out;
    out.record = base_record("interpolate", json{{"z1", cx(v[0])}, {"z2", cx(v[1])}, {"z3", cx(v[2])},
                                                 {"w1", cx(v[3])}, {"w2", cx(v[4])}, {"solve", solve_flag}});
    auto& o = out.record["outputs"];
    out.record["tolerances"]["extremal"] = tol;
    o["feasible"] = f.feasible;
    o["margin"] = f.margin;
    o["caratheodory"] = f.caratheodory;
    o["target_distance"] = f.target_distance;
    std::ostringstream text;
    text << (f.feasible ? "feasible" : "infeasible") << ", margin " << format_real(f.margin, 3) << "\n";
    const bool extremal = std::abs(f.margin) <= tol;
    o["extremal"] = extremal;
    if (!f.feasible) {
        out.exit_code = kExitFail;
        out.text = text.str();
        return out;
    }
    if (solve_flag) {
        const InterpolationSolution s = solve(p);
        const Complex r[3] = {s(v[0]) - v[3], s(v[1]) - v[4], s.derivative(v[2])};
        json sol{{"kind", s.kind() == SolutionKind::Extremal ? "extremal" : "slack"},
                 {"inner", automorphism_json(s.inner())},
                 {"core", blaschke_json(s.core())},
                 {"outer_rotation", cx(s.outer().rotation())},
                 {"residuals", {std::abs(r[0]), std::abs(r[1]), std::abs(r[2])}}};
        text << "solution f = pick o core o tau, core " << describe(s.core()) << "\n";
        if (extremal) {
            const ExtremalClassification c = extremal_classify(p);
            sol["order"] = c.order;
            sol["alpha0"] = cx(c.alpha0);
            sol["psi"] = automorphism_json(c.psi);
            text << "extremal: Blaschke order " << c.order << ", psi mu " << format_complex_human(c.psi.mu())
                 << " center " << format_complex_human(c.psi.center()) << "\n";
        }
        text << "residuals " << format_real(std::abs(r[0]), 2) << " " << format_real(std::abs(r[1]), 2) << " "
             << format_real(std::abs(r[2]), 2) << "\n";
        o["solution"] = sol;
    }
    out.text = text.str();
    return out;
}

CommandOutput cmd_extend(const ExtendOptions& options, const GlobalOptions& g) {
    std::vector<NeilePoint> points = options.points;
    if (points.empty()) {
        CounterRng rng(g.seed, 11);
        for (int i = 0; i < 8; ++i) points.push_back(NeilePoint::from_parameter(rng.disk(0.9)));
    }
    const bool flat = std::abs(options.function.at_origin()) == 0.0;
    if (!flat && !options.general) {
        throw DomainError("f(0,0) != 0; use --general for functions not vanishing at the origin");
    }
    const TransferRealization G =
        options.general ? extend_general(points, options.function) : realize_extension(points, options.function);
    const double tol = g.tol.value_or(1e-8);
    const BidiskFunction fn = [&G](Complex z, Complex w) { return G(z, w); };
    const double sup = sampled_sup(fn, options.samples, g.seed);

    CommandOutput out;
    json pts = json::array();
    for (const auto& x : points) pts.push_back(point_json(x));
    out.record = base_record("extend", json{{"function", options.function_text},
                                            {"general", options.general},
                                            {"points", pts},
                                            {"samples", options.samples},
                                            {"seed", g.seed}});
    auto& o = out.record["outputs"];
    out.record["tolerances"]["sup_slack"] = tol;
    out.record["tolerances"]["interpolation"] = 1e-8;
    o["state_dimension"] = {G.n1(), G.n2()};
    o["scale"] = G.scale();
    o["offset"] = cx(G.offset());
    o["bound"] = G.bound();
    o["sampled_sup"] = sup;
    o["interpolation_residual"] = G.diagnostics.interpolation_residual;
    o["gram_defect"] = G.diagnostics.gram_defect;
    o["colligation_norm"] = G.diagnostics.colligation_norm;
    o["delta_min_eigenvalue"] = G.diagnostics.psd_min_eigenvalue;
    std::ostringstream text;
    text << "realization: state dimension " << G.n1() << "+" << G.n2() << ", bound " << h6(G.bound())
         << (options.general ? " (general)" : " (sqrt 2)") << "\n"
         << "interpolation residual " << format_real(G.diagnostics.interpolation_residual, 2)
         << ", sampled sup " << h6(sup) << " over " << options.samples << " samples\n";
    if (flat) {
        constexpr double h = 1e-5;
        const Complex dz = (G(h, 0.0) - G(-h, 0.0)) / (2 * h), dw = (G(0.0, h) - G(0.0, -h)) / (2 * h);
        o["origin_partials"] = {cx(dz), cx(dw)};
        text << "origin partials dG/dz " << format_complex_human(dz) << ", dG/dw " << format_complex_human(dw) << "\n";
    }
    if (options.function_text == "preset:lower-bound") {
        const ExtensionCertificate cert = lower_bound_certificate();
        o["certificate"] = json{{"kind", to_string(cert.kind)},
                                {"bound", cert.bound},
                                {"partial_z", cx(cert.partial_z)},
                                {"partial_w", cx(cert.partial_w)},
                                {"witness", cert.witness}};
        text << "certificate: every extension has sup >= " << h6(cert.bound) << "\n";
    }
    const bool ok = sup <= G.bound() + tol && G.diagnostics.interpolation_residual <= 1e-8;
    o["pass"] = ok;
    out.exit_code = ok ? kExitOk : kExitFail;
    out.text = text.str();
    return out;
}

std::string grid_csv(Complex lambda, Complex delta, int radii, int angles) {
    if (radii < 2 || angles < 1) throw DomainError("grid needs at least 2 radii and 1 angle");
    std::string csv = "r,theta,re_alpha,im_alpha,F\n";
    for (int i = 0; i < radii; ++i) {
        const double r = static_cast<double>(i) / (radii - 1);
        for (int j = 0; j < angles; ++j) {
            const double t = 2.0 * std::numbers::pi * j / angles;
            const Complex a = std::polar(r, t);
            csv += format_real(r, 17) + "," + format_real(t, 17) + "," + format_real(a.real(), 17) + "," +
                   format_real(a.imag(), 17) + "," + format_real(F_eval(ClosedDiskPoint(a), lambda, delta), 17) +
                   "\n";
        }
    }
    return csv;
}

CommandOutput cmd_grid(const std::string& lambda, const std::string& delta, int radii, int angles,
                       const std::string& out_path, const GlobalOptions& g) {
    (void)g;
    const Complex l = parse_complex(lambda), d = parse_complex(delta);
    if (!in_open_disk(l) || !in_open_disk(d)) throw DomainError("grid parameters must lie in the open unit disk");
    const std::string csv = grid_csv(l, d, radii, angles);
    if (out_path != "-") {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + out_path + "'");
        f << csv;
    }
    double best = 0.0;
    Complex arg = 0.0;
    double ring_lo = INFINITY, ring_hi = -INFINITY;
    for (int i = 0; i < radii; ++i) {
        const double r = static_cast<double>(i) / (radii - 1);
        for (int j = 0; j < angles; ++j) {
            const Complex a = std::polar(r, 2.0 * std::numbers::pi * j / angles);
            const double v = F_eval(ClosedDiskPoint(a), l, d);
            if (v > best) {
                best = v;
                arg = a;
            }
            if (i == radii - 1) {
                ring_lo = std::min(ring_lo, v);
                ring_hi = std::max(ring_hi, v);
            }
        }
    }
    CommandOutput out;
    out.record = base_record("grid", json{{"lambda", cx(l)}, {"delta", cx(d)}, {"radii", radii},
                                          {"angles", angles}, {"out", out_path}});
    auto& o = out.record["outputs"];
    o["max_F"] = best;
    o["argmax"] = cx(arg);
    o["ring_min"] = ring_lo;
    o["ring_max"] = ring_hi;
    o["rows"] = radii * angles;
    out.text = (out_path == "-" ? csv : std::string()) + (out_path == "-" ? "" : "wrote " + out_path + "\n") +
               (out_path == "-" ? "" : "max F " + h6(best) + " at " + format_complex_human(arg) + "\n");
    return out;
}

CommandOutput cmd_verify(const std::string& profile, std::uint64_t seed, bool inject_fault,
                         const std::optional<std::string>& json_out, const GlobalOptions& g) {
    (void)g;
    SuiteOptions opts;
    if (profile == "quick") opts.profile = SuiteProfile::Quick;
    else if (profile == "thorough") opts.profile = SuiteProfile::Thorough;
    else throw ParseError("unknown profile '" + profile + "'");
    opts.seed = seed;
    opts.inject_fault = inject_fault;
    const SuiteReport suite = run_suite(opts);
    const json report = to_json(suite);
    if (json_out) {
        std::ofstream f(*json_out, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + *json_out + "'");
        f << report.dump(2) << "\n";
    }
    CommandOutput out;
    out.record = base_record("verify", json{{"profile", profile}, {"seed", seed}});
    out.record["outputs"] = report;
    json tols = json::object();
    for (const auto& r : suite.reports) tols[r.quantity] = r.tolerance;
    out.record["tolerances"] = tols;
    std::ostringstream text;
    for (const auto& r : suite.reports) {
        text << (r.pass ? "PASS " : "FAIL ") << r.quantity << "  gap " << format_real(r.abs_gap, 3) << " (tol "
             << format_real(r.tolerance, 3) << ", " << r.samples << " samples)\n";
    }
    text << (suite.pass ? "all checks passed" : "verification FAILED") << "\n";
    out.text = text.str();
    out.exit_code = suite.pass ? kExitOk : kExitFail;
    return out;
}

}  // namespace neile
