// Command-line front end: validation, reports, decomposition, flip-graph
// exploration and figure rendering for cyclic polygons.
//
// Exit codes: 0 success, 1 domain negative (e.g. no decomposition exists,
// a failed verify), 2 input or usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stardec/border.hpp"
#include "stardec/explorer.hpp"
#include "stardec/io.hpp"

using namespace stardec;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::SyntaxError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::SyntaxError, "cannot open " + path + " for writing");
    out << text;
}

ordered_json diagonals_json(const std::vector<Diagonal>& diagonals) {
    ordered_json out = ordered_json::array();
    for (const Diagonal& d : diagonals)
        out.push_back(ordered_json::array({d.u, d.v}));
    return out;
}

ordered_json stars_json(const std::vector<Star>& stars) {
    ordered_json out = ordered_json::array();
    for (const Star& s : stars)
        out.push_back(s.vertices);
    return out;
}

std::string diagonals_text(const std::vector<Diagonal>& diagonals) {
    std::ostringstream out;
    for (size_t i = 0; i < diagonals.size(); ++i) {
        if (i)
            out << " ";
        out << diagonals[i].u << "-" << diagonals[i].v;
    }
    return out.str();
}

void print_decomposition(const StarDecomposition& dec, bool json) {
    if (json) {
        ordered_json out;
        out["diagonals"] = diagonals_json(dec.diagonals());
        out["stars"] = stars_json(dec.stars);
        out["maximal"] = is_maximal(dec);
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "diagonals: " << diagonals_text(dec.diagonals()) << "\n";
    for (const Star& s : dec.stars)
        std::cout << "star " << s.to_string() << "\n";
}

struct Options {
    std::string input;
    std::string input2;
    std::string format = "text";
    std::string out;
    std::string dot;
    bool decompose = false;
    bool no_labels = false;
    unsigned seed = 1;
    int max_n = 8;
    VertexId flip_u = 0, flip_v = 0;
};

int run_validate(const Options& opt) {
    bool json = opt.format == "json";
    std::string text = read_input(opt.input);
    try {
        PolygonDocument doc = parse_polygon(text);
        if (json) {
            ordered_json out;
            out["valid"] = true;
            out["n"] = doc.n;
            out["name"] = doc.name ? ordered_json(*doc.name) : ordered_json(nullptr);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "valid cyclic polygon with " << doc.n << " vertices\n";
        }
        return kOk;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SyntaxError)
            throw;
        if (json) {
            ordered_json out;
            out["valid"] = false;
            out["error"] = e.what();
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return kNegative;
    }
}

int run_info(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    CyclicPolygon poly = doc.polygon();
    const int n = poly.size();
    const int r = poly.rotation_number();
    const int p = static_cast<int>(linkable_pairs(poly).size());
    const int s = n - 2 * r;
    const long long d = static_cast<long long>(p) - static_cast<long long>(s) * (s - 1) / 2;
    if (opt.format == "json") {
        ordered_json out;
        out["n"] = n;
        out["rotation_number"] = r;
        out["linkable_pairs"] = p;
        out["stars"] = s;
        out["maximal_diagonals"] = d;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n: " << n << "\n"
                  << "rotation number r: " << r << "\n"
                  << "linkable pairs p: " << p << "\n"
                  << "stars per decomposition n-2r: " << s << "\n"
                  << "diagonals per maximal decomposition p-C(n-2r,2): " << d << "\n";
    }
    return kOk;
}

int run_exists(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    bool admits = admits_star_decomposition(doc.polygon());
    if (opt.format == "json") {
        ordered_json out;
        out["exists"] = admits;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (admits ? "star decomposition exists\n" : "no star decomposition\n");
    }
    return admits ? kOk : kNegative;
}

int run_decompose(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    std::optional<StarDecomposition> peeled = peel_decomposition(doc.polygon());
    if (!peeled) {
        if (opt.format == "json")
            std::cout << R"({"exists":false})" << "\n";
        else
            std::cout << "no star decomposition\n";
        return kNegative;
    }
    print_decomposition(maximalize(*peeled), opt.format == "json");
    return kOk;
}

int run_maximalize(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    StarDecomposition dec =
        star_decomposition(doc.polygon(), doc.diagonals.value_or(std::vector<Diagonal>{}));
    print_decomposition(maximalize(dec), opt.format == "json");
    return kOk;
}

int run_enumerate(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    FlipGraph graph = enumerate_maximal(doc.polygon());
    if (opt.format == "json") {
        ordered_json out;
        out["nodes"] = graph.node_count();
        out["edges"] = graph.edge_count();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << graph.node_count() << " decompositions\n" << graph.edge_count() << " flip edges\n";
    }
    if (!opt.dot.empty())
        write_output(opt.dot, to_dot(graph, doc.name.value_or("flipgraph")));
    return kOk;
}

int run_flip(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    StarDecomposition dec =
        star_decomposition(doc.polygon(), doc.diagonals.value_or(std::vector<Diagonal>{}));
    FlipResult result = diagonal_flip(dec, Diagonal(opt.flip_u, opt.flip_v));
    if (opt.format == "json") {
        ordered_json out;
        out["removed"] = ordered_json::array({Diagonal(opt.flip_u, opt.flip_v).u,
                                              Diagonal(opt.flip_u, opt.flip_v).v});
        out["added"] = ordered_json::array({result.added.u, result.added.v});
        out["diagonals"] = diagonals_json(result.decomposition.diagonals());
        out["stars"] = stars_json(result.decomposition.stars);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "flipped " << Diagonal(opt.flip_u, opt.flip_v).u << "-"
                  << Diagonal(opt.flip_u, opt.flip_v).v << " to " << result.added.u << "-" << result.added.v
                  << "\n";
        print_decomposition(result.decomposition, false);
    }
    return kOk;
}

int run_path(const Options& opt) {
    PolygonDocument doc1 = parse_polygon(read_input(opt.input));
    PolygonDocument doc2 = parse_polygon(read_input(opt.input2));
    if (!(doc1.polygon() == doc2.polygon()))
        throw Error(ErrorKind::InvalidParameters, "the two documents describe different polygons");
    StarDecomposition from =
        star_decomposition(doc1.polygon(), doc1.diagonals.value_or(std::vector<Diagonal>{}));
    StarDecomposition to =
        star_decomposition(doc2.polygon(), doc2.diagonals.value_or(std::vector<Diagonal>{}));
    FlipGraph graph = enumerate_maximal(doc1.polygon());
    std::vector<FlipStep> path = flip_path(graph, canonical_key(from), canonical_key(to));
    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (const FlipStep& step : path)
            out.push_back(ordered_json{{"remove", ordered_json::array({step.removed.u, step.removed.v})},
                                       {"add", ordered_json::array({step.added.u, step.added.v})}});
        std::cout << ordered_json{{"flips", out}}.dump() << "\n";
    } else {
        std::cout << path.size() << " flips\n";
        for (const FlipStep& step : path)
            std::cout << "- " << step.removed.u << "-" << step.removed.v << " + " << step.added.u << "-"
                      << step.added.v << "\n";
    }
    return kOk;
}

int run_render(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    std::string svg;
    if (opt.decompose) {
        std::optional<StarDecomposition> peeled = peel_decomposition(doc.polygon());
        if (!peeled) {
            std::cerr << "no star decomposition to render\n";
            return kNegative;
        }
        svg = render_svg(maximalize(*peeled), !opt.no_labels);
    } else {
        RenderOptions render;
        render.labels = !opt.no_labels;
        svg = render_svg(doc.subdivided(), render);
    }
    write_output(opt.out, svg);
    return kOk;
}

int run_verify(const Options& opt) {
    PolygonDocument doc = parse_polygon(read_input(opt.input));
    VerifyOptions options;
    options.oracle_max_n = opt.max_n;
    options.seed = opt.seed;
    VerifyReport report = verify_suite(doc.polygon(), options);
    if (opt.format == "json") {
        ordered_json checks = ordered_json::array();
        for (const CheckResult& check : report.checks)
            checks.push_back(
                ordered_json{{"name", check.name}, {"pass", check.pass}, {"details", check.details}});
        std::cout << ordered_json{{"all_pass", report.all_pass()}, {"checks", checks}}.dump() << "\n";
    } else {
        for (const CheckResult& check : report.checks)
            std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.details << "\n";
    }
    return report.all_pass() ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"star decompositions of cyclic polygons"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.input, "polygon JSON file ('-' for stdin)")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "check that a file describes a cyclic polygon");
    add_input(validate);
    add_format(validate);

    CLI::App* info = app.add_subcommand("info", "print n, r, p and the decomposition counts");
    add_input(info);
    add_format(info);

    CLI::App* decompose = app.add_subcommand("decompose", "print a maximal star decomposition");
    add_input(decompose);
    add_format(decompose);

    CLI::App* maximalize_cmd = app.add_subcommand("maximalize", "grow the file's decomposition to maximal");
    add_input(maximalize_cmd);
    add_format(maximalize_cmd);

    CLI::App* enumerate = app.add_subcommand("enumerate", "count all maximal decompositions by flips");
    add_input(enumerate);
    add_format(enumerate);
    enumerate->add_option("--dot", opt.dot, "write the flip graph as Graphviz DOT");

    CLI::App* flip = app.add_subcommand("flip", "flip one diagonal of a maximal decomposition");
    add_input(flip);
    flip->add_option("u", opt.flip_u, "diagonal endpoint")->required();
    flip->add_option("v", opt.flip_v, "diagonal endpoint")->required();
    add_format(flip);

    CLI::App* path = app.add_subcommand("path", "flip sequence between two decompositions");
    add_input(path);
    path->add_option("file2", opt.input2, "target polygon JSON file")->required();
    add_format(path);

    CLI::App* exists = app.add_subcommand("exists", "decide whether a star decomposition exists");
    add_input(exists);
    add_format(exists);

    CLI::App* render = app.add_subcommand("render", "draw the polygon as SVG");
    add_input(render);
    render->add_option("--out", opt.out, "output file (default stdout)");
    render->add_flag("--decompose", opt.decompose, "color a maximal decomposition per star");
    render->add_flag("--no-labels", opt.no_labels, "omit vertex labels");

    CLI::App* verify = app.add_subcommand("verify", "run the full verification battery on one polygon");
    add_input(verify);
    add_format(verify);
    verify->add_option("--seed", opt.seed, "seed for the randomized replay check");
    verify->add_option("--max-n", opt.max_n, "largest n for the exhaustive subset oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (validate->parsed())
            return run_validate(opt);
        if (info->parsed())
            return run_info(opt);
        if (decompose->parsed())
            return run_decompose(opt);
        if (maximalize_cmd->parsed())
            return run_maximalize(opt);
        if (enumerate->parsed())
            return run_enumerate(opt);
        if (flip->parsed())
            return run_flip(opt);
        if (path->parsed())
            return run_path(opt);
        if (exists->parsed())
            return run_exists(opt);
        if (render->parsed())
            return run_render(opt);
        if (verify->parsed())
            return run_verify(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
