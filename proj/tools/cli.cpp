#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "svg.hpp"
#include "udgcut/certify.hpp"
#include "udgcut/errors.hpp"
#include "udgcut/reduction.hpp"
#include "udgcut/serialization.hpp"
#include "udgcut/solvers.hpp"

namespace udgcut::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string output;
    std::string svg;
    std::string drawing;
    std::string method = "auto";
    bool bisection = false;
    std::uint64_t seed = 1;
    std::size_t max_width = kDefaultWidthCeiling;
    std::size_t brute_limit = kDefaultBruteLimit;
    std::size_t subdivision_n = 200;
    std::size_t gadget_n = 100;
    std::size_t reduction_n = 20;
    bool skip_named = false;
    bool relax_gadget = false;
    bool raw_drawing = false;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
    if (!f) throw InputError("failed writing " + path);
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

unsigned worker_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("UDG_REDUCE_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || cap == 0) throw InputError("UDG_REDUCE_THREADS must be a positive integer");
        n = std::min<unsigned long>(n, cap);
    }
    return n;
}

void check_paths(const RunConfig& c) {
    for (const std::string* p : {&c.output, &c.svg, &c.drawing})
        if (!p->empty() && *p != "-" && *p == c.input) throw InputError("output path equals input path " + c.input);
    if (!c.output.empty() && c.output != "-" && c.output == c.svg) throw InputError("--out and --svg are the same file");
    if (c.max_width == 0 || c.brute_limit == 0) throw InputError("limits must be positive");
}

SolveMethod method_of(const std::string& s) {
    if (s == "brute") return SolveMethod::brute;
    if (s == "dp") return SolveMethod::dp;
    return SolveMethod::automatic;
}

std::string side_string(const Side& side) {
    std::string s;
    for (auto b : side) s.push_back(b ? '1' : '0');
    return s;
}

int cmd_reduce(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Graph g = parse_graph_text(read_input(c.input));
    const ReductionOutput r = reduce(g);
    write_output(c.output, reduction_to_json(r), out);
    if (!c.svg.empty()) {
        std::vector<std::optional<Role>> roles;
        for (const VertexInfo& v : r.provenance) roles.emplace_back(v.role);
        write_output(c.svg, render_svg(r.model, roles), out);
    }
    if (!c.drawing.empty()) write_output(c.drawing, drawing_to_json(r.drawing), out);
    std::ostream& summary = c.output.empty() || c.output == "-" ? err : out;
    summary << "k " << r.k << "\nt " << r.t << "\nvertices " << r.result().vertex_count() << "\nedges "
            << r.result().edge_count() << '\n';
    return 0;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
    const std::string text = read_input(c.input);
    std::optional<ModelDocument> doc;
    Graph g;
    if (looks_like_json(text)) {
        doc = parse_model_json(text);
        g = doc->model.graph;
    } else {
        g = parse_graph_text(text);
    }

    const unsigned threads = worker_threads();
    Cut cut;
    if (c.bisection) {
        if (method_of(c.method) == SolveMethod::dp)
            throw InputError("maximum bisection is only available with --method brute or auto");
        cut = max_bisection_bruteforce(g, {c.brute_limit, threads});
    } else {
        cut = max_cut(g, {method_of(c.method), c.brute_limit, c.max_width, threads});
    }
    out << "size " << cut.size << "\nside " << side_string(cut.side) << '\n';
    if (!c.bisection && doc && doc->k && doc->t) out << "recovered " << recover_mc(cut.size, *doc->k, *doc->t) << '\n';
    return 0;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
    const ModelDocument doc = parse_model_json(read_input(c.input));
    const ModelReport rep = validate_model(doc.model);
    if (doc.model.points.size() >= 2) out << "precision2 " << precision2(doc.model) << '\n';
    if (rep.ok) {
        out << "valid\n";
        return 0;
    }
    out << "invalid " << rep.failures.size() << " pair(s)\n";
    for (const AdjacencyWitness& w : rep.failures)
        out << (w.kind == AdjacencyWitness::Kind::edge_too_long ? "edge_too_long " : "missing_edge ") << w.u << ' '
            << w.v << " dist2 " << w.dist2 << '\n';
    return 1;
}

int cmd_planarity(const RunConfig& c, std::ostream& out) {
    const ModelDocument doc = parse_model_json(read_input(c.input));
    const ModelReport rep = validate_model(doc.model);
    if (!rep.ok) throw InvalidModelError("model does not realize its graph; run validate for details");
    out << to_string(planarity_verdict(doc.model)) << '\n';
    return 0;
}

int cmd_render(const RunConfig& c, std::ostream& out) {
    const ModelDocument doc = parse_model_json(read_input(c.input));
    write_output(c.svg.empty() ? c.output : c.svg, render_svg(doc.model, doc.roles), out);
    return 0;
}

int cmd_draw(const RunConfig& c, std::ostream& out) {
    const Graph g = parse_graph_text(read_input(c.input));
    MeshDrawing d = mesh_draw(g);
    if (!c.raw_drawing) d = standardize(d);
    write_output(c.output, drawing_to_json(d), out);
    return 0;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
    CertifyOptions opts;
    opts.seed = c.seed;
    opts.subdivision_iterations = c.subdivision_n;
    opts.gadget_iterations = c.gadget_n;
    opts.reduction_random = c.reduction_n;
    opts.include_named = !c.skip_named;
    opts.gadget_mode = c.relax_gadget ? GadgetPrecondition::relax : GadgetPrecondition::enforce;
    opts.max_width = c.max_width;
    opts.threads = worker_threads();
    const CertifyReport rep = certify(opts);
    for (const SuiteResult& s : rep.suites) {
        out << (s.ok() ? "PASS " : "FAIL ") << s.name << " instances=" << s.instances
            << " failures=" << s.failures.size() << '\n';
        for (const Counterexample& f : s.failures) {
            out << "  counterexample: " << f.detail << '\n';
            std::istringstream lines(format_graph_text(f.graph));
            for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
        }
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Max-Cut to unit disk graph reduction toolkit", "udgcut"};
    app.require_subcommand(1);
    RunConfig c;

    auto with_input = [&](CLI::App* sub) { sub->add_option("--in", c.input, "Input file, - for stdin")->required(); };
    auto with_output = [&](CLI::App* sub) { sub->add_option("--out", c.output, "Output file (default stdout)"); };

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "Compile a graph into a unit disk model (JSON)");
    with_input(reduce_cmd);
    with_output(reduce_cmd);
    reduce_cmd->add_option("--svg", c.svg, "Also render the model as SVG");
    reduce_cmd->add_option("--drawing", c.drawing, "Also dump the standard mesh drawing as JSON");

    CLI::App* solve_cmd = app.add_subcommand("solve", "Exact maximum cut or bisection of a graph or model");
    with_input(solve_cmd);
    auto* cut_flag = solve_cmd->add_flag("--cut", "Maximum cut (default)");
    solve_cmd->add_flag("--bisection", c.bisection, "Maximum bisection")->excludes(cut_flag);
    solve_cmd->add_option("--method", c.method, "Solver")->check(CLI::IsMember({"brute", "dp", "auto"}));
    solve_cmd->add_option("--max-width", c.max_width, "Tree decomposition width ceiling");
    solve_cmd->add_option("--brute-limit", c.brute_limit, "Largest vertex count for brute force");

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check that a model realizes its graph");
    with_input(validate_cmd);

    CLI::App* planarity_cmd = app.add_subcommand("planarity", "Straight-line planarity verdict of a model");
    with_input(planarity_cmd);

    CLI::App* render_cmd = app.add_subcommand("render", "Render a model as SVG");
    with_input(render_cmd);
    with_output(render_cmd);
    render_cmd->add_option("--svg", c.svg, "SVG output file (alias of --out)");

    CLI::App* draw_cmd = app.add_subcommand("draw", "Dump the mesh drawing of a graph as JSON");
    with_input(draw_cmd);
    with_output(draw_cmd);
    draw_cmd->add_flag("--raw", c.raw_drawing, "Skip standardization");

    CLI::App* certify_cmd = app.add_subcommand("certify", "Run the randomized cut-identity suites");
    certify_cmd->add_option("--seed", c.seed, "RNG seed");
    certify_cmd->add_option("--subdivision", c.subdivision_n, "Double-subdivision instances");
    certify_cmd->add_option("--gadget", c.gadget_n, "Gadget instances");
    certify_cmd->add_option("--reduction", c.reduction_n, "Random reduction instances");
    certify_cmd->add_flag("--skip-named", c.skip_named, "Skip K4, K5, C5 and Petersen");
    certify_cmd->add_flag("--relax-gadget", c.relax_gadget, "Allow hosts with cycle edges (negative control)");
    certify_cmd->add_option("--max-width", c.max_width, "Tree decomposition width ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        check_paths(c);
        if (*reduce_cmd) return cmd_reduce(c, out, err);
        if (*solve_cmd) return cmd_solve(c, out);
        if (*validate_cmd) return cmd_validate(c, out);
        if (*planarity_cmd) return cmd_planarity(c, out);
        if (*render_cmd) return cmd_render(c, out);
        if (*draw_cmd) return cmd_draw(c, out);
        if (*certify_cmd) return cmd_certify(c, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace udgcut::cli
