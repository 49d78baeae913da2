#include "chroma/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chroma/constants.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/proof_script.hpp"
#include "chroma/solver.hpp"
#include "chroma/tiling.hpp"

namespace chroma::cli {

namespace {

// Usage problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    double tol = 1e-9;
    double margin = 1e-6;
    double d = 1.30;
    bool d_given = false;
    std::optional<double> eps;
    std::string out;
    std::string format = "json";

    std::vector<std::string> build;     // graph build <kind> [args]
    std::string solve_mode;             // chromatic | feasible | enumerate | classify
    std::vector<std::string> instance;  // builtin name tokens or a file path
    int k = -1;
    int kmax = kMaxColors;
    std::string group = "rotation,reflection,colors";

    std::string replay_case;
    std::string transcript;
    std::string svg;

    double side = 0.5;
    int radius = 4;
};

ToleranceConfig tolerances(const Options& o) { return ToleranceConfig(o.tol, o.margin); }

double interval_d(const Options& o) {
    if (o.eps && o.d_given) throw UsageError("give either --d or --eps, not both");
    if (o.eps) return interval_from_eps(*o.eps).d();
    return interval_from_d(o.d).d();
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + ": expected an integer, got '" + s + "'");
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + ": expected a number, got '" + s + "'");
}

std::set<int> parse_offsets(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(to_int(item, "offsets"));
    return out;
}

GeometricGraph build_named(const std::vector<std::string>& tokens, const Options& o) {
    if (tokens.empty()) throw UsageError("missing instance");
    const std::string& kind = tokens[0];
    auto need = [&](std::size_t n) {
        if (tokens.size() != n) throw UsageError("'" + kind + "' expects " + std::to_string(n - 1) + " argument(s)");
    };
    if (kind == "rim18") return need(1), build_rim18();
    if (kind == "rim18+bi1") return need(1), build_rim18_with_demand(1, 2);
    if (kind == "paper19") return need(1), build_paper19(interval_d(o), tolerances(o));
    if (kind == "simplex") return need(2), simplex_instance(to_int(tokens[1], "simplex n"));
    if (kind == "circulant") {
        need(3);
        return circulant({to_int(tokens[1], "circulant n"), parse_offsets(tokens[2])});
    }
    if (kind == "two-ring") {
        need(6);
        auto pts = two_ring_layout(to_int(tokens[1], "n1"), to_int(tokens[2], "n2"), to_double(tokens[3], "r1"),
                                   to_double(tokens[4], "r2"), to_double(tokens[5], "phase2"));
        pts.emplace_back(0.0, 0.0);
        std::vector<int> demands(pts.size(), 1);
        demands.back() = 3;
        try {
            return build_interval_graph(std::move(pts), interval_from_d(interval_d(o)), tolerances(o),
                                        std::move(demands));
        } catch (const ConstructionError& e) {
            throw ValidationError(e.what());
        }
    }
    if (tokens.size() == 1 && std::filesystem::exists(kind)) return load_graph(kind, tolerances(o));
    throw UsageError("unknown instance '" + kind + "' (builtins: rim18, rim18+bi1, paper19, simplex N, circulant N A,B, "
                     "two-ring N1 N2 R1 R2 PHASE, or a graph file)");
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
    if (o.out.empty()) {
        out << content;
    } else {
        write_text_file(o.out, content);
        out << "wrote " << o.out << "\n";
    }
}

std::string number_word(int n) {
    static const char* kWords[] = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
                                   "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
                                   "seventeen", "eighteen"};
    return n >= 0 && n <= 18 ? kWords[n] : std::to_string(n);
}

std::string describe_profile(const std::map<int, int>& profile) {
    std::string out;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
        const auto [len, count] = *it;
        std::string unit = len == 1 ? "singles" : len == 2 ? "pairs" : len == 3 ? "triples" : "runs of " + std::to_string(len);
        if (!out.empty()) out += " + ";
        out += number_word(count) + " " + unit;
    }
    return out;
}

int cmd_graph(const Options& o, std::ostream& out) {
    const GeometricGraph g = build_named(o.build, o);
    if (o.format == "json") emit(o, graph_to_json(g), out);
    else if (o.format == "dot") emit(o, graph_to_dot(g), out);
    else if (o.format == "svg") {
        // Color the drawing with a witness when one exists with few colors.
        std::optional<SetColoring> witness;
        if (g.size() <= 40) {
            for (int k = 0; k <= 8 && !witness; ++k) witness = feasible(g, k);
        }
        emit(o, graph_to_svg(g, witness ? &*witness : nullptr), out);
    } else {
        throw UsageError("unknown format '" + o.format + "'");
    }
    return kExitOk;
}

SymmetryGroup parse_group(const std::string& s) {
    SymmetryGroup g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "rotation") g.rotation = true;
        else if (item == "reflection") g.reflection = true;
        else if (item == "colors") g.color_permutation = true;
        else if (item != "none" && !item.empty()) throw UsageError("unknown symmetry '" + item + "'");
    }
    return g;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const GeometricGraph g = build_named(o.instance, o);
    if (o.solve_mode == "chromatic") {
        try {
            out << chromatic_number(g, o.kmax) << "\n";
        } catch (const SearchExhausted& e) {
            out << "search exhausted: no coloring with at most " << o.kmax << " colors\n";
            return kExitFalsified;
        }
        return kExitOk;
    }
    if (o.k < 0) throw UsageError("--k is required for '" + o.solve_mode + "'");
    if (o.solve_mode == "feasible") {
        const auto w = feasible(g, o.k);
        if (!w) {
            out << "infeasible with " << o.k << " colors\n";
            return kExitFalsified;
        }
        emit(o, colorings_to_json(std::span<const SetColoring>(&*w, 1)), out);
        return kExitOk;
    }
    const auto all = enumerate_colorings(g, o.k);
    if (o.solve_mode == "enumerate") {
        if (o.out.empty()) out << all.size() << " colorings\n";
        else emit(o, colorings_to_json(all), out);
        return kExitOk;
    }
    if (o.solve_mode == "classify") {
        const auto classes = classify_colorings(g, all, o.k, parse_group(o.group));
        out << all.size() << " colorings, " << classes.size() << " classes\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& c = classes[i];
            out << "class " << i + 1 << ": " << describe_profile(c.run_profile) << " (" << c.descriptor()
                << "), orbit " << c.orbit_size << ", members " << c.members << ", representative";
            for (ColorSet s : c.representative) out << ' ' << to_string(s);
            out << "\n";
        }
        return kExitOk;
    }
    throw UsageError("unknown solve mode '" + o.solve_mode + "'");
}

int cmd_replay(const Options& o, std::ostream& out) {
    if (o.replay_case.size() != 1) throw UsageError("case must be one of a, b, c, d");
    const ReplayReport report = [&] {
        try {
            return replay_case(o.replay_case[0]);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }();
    if (!o.transcript.empty()) write_text_file(o.transcript, transcript_text(report));
    if (!o.svg.empty()) write_text_file(o.svg, strip_svg(report));
    out << report.summary() << "\n";
    return kExitOk;
}

int cmd_tiling(const std::string& mode, const Options& o, std::ostream& out) {
    if (mode == "certify") {
        out << certificate_text(certify(o.side, o.radius));
        return kExitOk;
    }
    if (mode == "proper") {
        const ProperVerdict v = proper_for(interval_from_d(interval_d(o)), o.side);
        out << certificate_text(v.certificate) << "proper: " << (v.proper ? "true" : "false") << "\n";
        return v.proper ? kExitOk : kExitFalsified;
    }
    emit(o, tiling_svg(o.side, o.radius), out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const double d = interval_d(o);
    const ToleranceConfig tc = tolerances(o);
    if (!(d >= rim_chord_bound() + tc.margin()) || !(d <= hex_tiling_bound() - tc.margin())) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "precondition: d = " << d << " must lie in [2 sin(2pi/9) + margin, sqrt(7)/2 - margin] = ["
            << rim_chord_bound() + tc.margin() << ", " << hex_tiling_bound() - tc.margin() << "]";
        throw UsageError(msg.str());
    }
    auto stage_failed = [&](const std::string& stage, const std::string& why) {
        out << "FAILED at stage " << stage << ": " << why << "\n";
        return kExitFalsified;
    };
    const GeometricGraph g = build_paper19(d, tc);
    out << "graph: 19 vertices, " << g.edges().size() << " edges at d = " << d << "\n";
    if (feasible(g, 6)) return stage_failed("lower bound", "6-coloring found");
    if (!feasible(g, 7)) return stage_failed("lower bound", "no 7-coloring found");
    out << "lower bound: chromatic number 7 (6 colors infeasible)\n";
    for (char c : {'a', 'b', 'c', 'd'}) {
        try {
            out << "replay " << replay_case(c).summary() << "\n";
        } catch (const ScriptValidationError& e) {
            return stage_failed(std::string("replay ") + c, e.what());
        }
    }
    const double side = automatic_side(d);
    const ProperVerdict v = proper_for(interval_from_d(d), side);
    if (!v.proper) return stage_failed("upper bound", "tiling not proper");
    out << std::setprecision(9) << "upper bound: hexagonal 7-coloring with side " << side << " (tile diameter "
        << v.certificate.max_intra_tile << ", same-color gap " << v.certificate.min_same_color << ")\n";
    out << "χ = 7 verified at d = " << d << "\n";
    return kExitOk;
}

int cmd_constants(std::ostream& out) {
    bool ok = true;
    out << std::left << std::setw(14) << "name" << std::setw(18) << "closed form" << std::setw(16) << "value"
        << std::setw(12) << "quoted" << "status\n";
    for (const NamedConstant& c : constant_registry()) {
        std::ostringstream value;
        value << std::fixed << std::setprecision(10);
        if (c.value) value << *c.value;
        else value << "-";
        std::string status = "reference only";
        if (auto m = c.mismatch()) {
            status = *m <= 1e-6 ? "ok" : "MISMATCH";
            ok = ok && *m <= 1e-6;
        }
        out << std::setw(14) << c.name << std::setw(18) << (c.closed_form.empty() ? "-" : c.closed_form)
            << std::setw(16) << value.str() << std::setw(12) << std::fixed << std::setprecision(6) << c.quoted
            << status << "\n";
    }
    return ok ? kExitOk : kExitFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv(kToleranceEnv)) {
        try {
            o.tol = std::stod(env);
        } catch (const std::exception&) {
            err << "ignoring malformed " << kToleranceEnv << "=" << env << "\n";
        }
    }

    CLI::App app{"Verification toolkit for 7-chromatic interval distance graphs", "chroma"};
    app.require_subcommand(1);
    app.add_option("--tol", o.tol, "comparison tolerance");
    app.add_option("--margin", o.margin, "minimum clearance from interval boundaries");

    auto* graph = app.add_subcommand("graph", "build and serialize instances");
    graph->require_subcommand(1);
    auto* build = graph->add_subcommand("build", "rim18 | rim18+bi1 | paper19 | simplex N | circulant N A,B | two-ring ...");
    build->add_option("kind", o.build, "instance and its arguments")->required();
    auto* d_opt = build->add_option("--d", o.d, "upper end of the forbidden interval");
    build->add_option("--eps", o.eps, "symmetric half-width; d = (1+eps)/(1-eps)")->excludes(d_opt);
    build->add_option("--out", o.out, "output file (stdout if omitted)");
    build->add_option("--format", o.format, "json | dot | svg");

    auto* solve = app.add_subcommand("solve", "set-coloring solver");
    solve->add_option("mode", o.solve_mode, "chromatic | feasible | enumerate | classify")->required();
    solve->add_option("instance", o.instance, "builtin name or graph file")->required();
    solve->add_option("--k", o.k, "number of colors");
    solve->add_option("--kmax", o.kmax, "largest k tried by 'chromatic'");
    solve->add_option("--group", o.group, "symmetries for classify: rotation,reflection,colors");
    solve->add_option("--d", o.d, "d for paper19");
    solve->add_option("--out", o.out, "write colorings JSON here");

    auto* replay = app.add_subcommand("replay", "replay a proof case (a, b, c, d)");
    replay->add_option("case", o.replay_case, "a | b | c | d")->required();
    replay->add_option("--transcript", o.transcript, "write the step transcript here");
    replay->add_option("--svg", o.svg, "write the strip diagram here");

    auto* tiling = app.add_subcommand("tiling", "hexagonal 7-coloring upper bound");
    tiling->require_subcommand(1);
    auto* certify_cmd = tiling->add_subcommand("certify", "same-color separation certificate");
    certify_cmd->add_option("--side", o.side, "hexagon circumradius")->required();
    certify_cmd->add_option("--radius", o.radius, "sweep radius in cells");
    auto* proper_cmd = tiling->add_subcommand("proper", "is the tiling proper for [1, d]?");
    proper_cmd->add_option("--d", o.d, "upper end of the forbidden interval")->required();
    proper_cmd->add_option("--side", o.side, "hexagon circumradius")->required();
    auto* render_cmd = tiling->add_subcommand("render", "SVG patch of the tiling");
    render_cmd->add_option("--side", o.side, "hexagon circumradius");
    render_cmd->add_option("--radius", o.radius, "patch radius in cells");
    render_cmd->add_option("--out", o.out, "output file");

    auto* verify = app.add_subcommand("verify-theorem", "lower bound, proof replay and upper bound at one d");
    auto* vd = verify->add_option("--d", o.d, "upper end of the forbidden interval");
    verify->add_option("--eps", o.eps, "symmetric half-width")->excludes(vd);

    auto* constants = app.add_subcommand("constants", "named constants against their quoted decimals");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        tolerances(o);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    o.d_given = build->count("--d") + verify->count("--d") + proper_cmd->count("--d") + solve->count("--d") > 0;

    try {
        if (graph->parsed()) return cmd_graph(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (replay->parsed()) return cmd_replay(o, out);
        if (certify_cmd->parsed()) return cmd_tiling("certify", o, out);
        if (proper_cmd->parsed()) return cmd_tiling("proper", o, out);
        if (render_cmd->parsed()) return cmd_tiling("render", o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (constants->parsed()) return cmd_constants(out);
    } catch (const ScriptValidationError& e) {
        err << "script validation failed: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency check failed: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace chroma::cli
