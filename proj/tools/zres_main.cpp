// Command line front end: validate | normalize | build | surface-graph |
// check | render over the JSON curve-graph format.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zres/dot_export.hpp"
#include "zres/json_io.hpp"
#include "zres/verifier.hpp"

using namespace zres;

namespace {

struct Options {
    std::string input;
    std::string output; // empty = stdout
    std::string format = "json";
    std::string order;  // comma separated override
    bool minimal = false;
    unsigned long long seed = 0;
    int steps = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
}

CurveGraph load_graph(const Options& opt) {
    auto g = curve_graph_from_json(parse_json(read_file(opt.input)));
    if (opt.steps > 0) {
        // refinement applies after validation, before the main operation
        const auto violations = validate(g);
        if (!violations.empty())
            throw std::runtime_error("input graph is invalid; cannot refine");
        g = random_refinement(normalize_parity(g), opt.seed, opt.steps);
    }
    return g;
}

std::vector<std::string> split_order(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

OrderedCurveGraph ordered_from(const CurveGraph& normalized, const Options& opt) {
    if (opt.order.empty()) return order_vertices(normalized);
    return order_with_override(normalized, split_order(opt.order));
}

int cmd_validate(const Options& opt) {
    const auto g = load_graph(opt);
    const auto violations = validate(g);
    CheckReport r;
    for (const auto& v : violations) {
        std::string ids;
        for (const auto& id : v.ids) ids += (ids.empty() ? "" : ",") + id;
        r.items.push_back({v.rule, ids, false, v.detail});
    }
    if (violations.empty()) r.items.push_back({"validate", "graph", true, ""});
    r.sort();
    if (!violations.empty()) {
        std::cerr << dump_canonical(report_to_json(r));
        return 1;
    }
    emit(opt, dump_canonical(report_to_json(r)));
    return 0;
}

int cmd_normalize(const Options& opt) {
    const auto g = normalize_parity(load_graph(opt));
    if (opt.format == "dot") emit(opt, curve_graph_to_dot(g));
    else emit(opt, dump_canonical(curve_graph_to_json(g)));
    return 0;
}

int cmd_build(const Options& opt) {
    const auto g = normalize_parity(load_graph(opt));
    const auto cx = build_complex(ordered_from(g, opt));
    if (opt.format == "dot") emit(opt, complex_to_dot(cx));
    else emit(opt, dump_canonical(complex_to_json(cx)));
    return 0;
}

int cmd_surface_graph(const Options& opt) {
    const auto g = normalize_parity(load_graph(opt));
    auto sg = surface_dual_graph(build_complex(ordered_from(g, opt)));
    if (opt.minimal) sg = blow_down_minimal(sg).graph;
    if (opt.format == "dot") emit(opt, sgraph_to_dot(sg));
    else emit(opt, dump_canonical(sgraph_to_json(sg)));
    return 0;
}

int cmd_check(const Options& opt) {
    const auto g = load_graph(opt);
    auto r = run_all(g);
    if (!opt.order.empty()) {
        // also exercise the pipeline under the explicit order
        const auto cx = build_complex(ordered_from(normalize_parity(g), opt));
        r.merge(check_fiber_balance(cx));
        r.merge(check_triple_point_formula(cx));
        r.sort();
    }
    const auto text = dump_canonical(report_to_json(r));
    if (!r.all_pass()) {
        std::cerr << text;
        return 1;
    }
    emit(opt, text);
    return 0;
}

int cmd_render(const Options& opt) {
    const auto g = normalize_parity(load_graph(opt));
    const auto cx = build_complex(ordered_from(g, opt));
    emit(opt, complex_to_dot(cx));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedded resolution of f(x,y) + z^2 from the resolution graph of f"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--input", opt.input, "curve graph JSON file")->required();
        cmd->add_option("--output", opt.output, "output path (default stdout)");
        if (with_format)
            cmd->add_option("--format", opt.format, "json or dot")
                ->check(CLI::IsMember({"json", "dot"}));
        cmd->add_option("--order", opt.order, "explicit vertex order, comma separated");
        cmd->add_option("--seed", opt.seed, "refinement seed");
        cmd->add_option("--steps", opt.steps, "apply this many random blow-ups first");
    };

    auto* validate_cmd = app.add_subcommand("validate", "report invariant violations");
    add_common(validate_cmd, false);
    auto* normalize_cmd = app.add_subcommand("normalize", "parity-normalize the graph");
    add_common(normalize_cmd);
    auto* build_cmd = app.add_subcommand("build", "build the divisor complex");
    add_common(build_cmd);
    auto* surface_cmd = app.add_subcommand("surface-graph", "dual resolution graph of f+z^2");
    add_common(surface_cmd);
    surface_cmd->add_flag("--minimal", opt.minimal, "blow down to the minimal model");
    auto* check_cmd = app.add_subcommand("check", "run every consistency check");
    add_common(check_cmd, false);
    auto* render_cmd = app.add_subcommand("render", "DOT of the surface adjacency graph");
    add_common(render_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt);
        if (normalize_cmd->parsed()) return cmd_normalize(opt);
        if (build_cmd->parsed()) return cmd_build(opt);
        if (surface_cmd->parsed()) return cmd_surface_graph(opt);
        if (check_cmd->parsed()) return cmd_check(opt);
        if (render_cmd->parsed()) return cmd_render(opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
