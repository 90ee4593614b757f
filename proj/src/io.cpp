#include "stardec/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace stardec {

namespace {

using nlohmann::ordered_json;

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value + 0.0); // normalize -0
    return buffer;
}

} // namespace

PolygonDocument parse_polygon(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw Error(ErrorKind::SyntaxError, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::SyntaxError, "top-level value must be an object");

    PolygonDocument doc;
    try {
        if (!j.contains("n") || !j["n"].is_number_integer())
            throw Error(ErrorKind::ValidationError, "field 'n' must be an integer");
        doc.n = j["n"].get<int>();
        if (!j.contains("succ") || !j["succ"].is_array())
            throw Error(ErrorKind::ValidationError, "field 'succ' must be an array");
        for (const auto& item : j["succ"]) {
            if (!item.is_number_integer())
                throw Error(ErrorKind::ValidationError, "field 'succ' must hold integers");
            doc.succ.push_back(item.get<VertexId>());
        }
        if (j.contains("diagonals")) {
            if (!j["diagonals"].is_array())
                throw Error(ErrorKind::ValidationError, "field 'diagonals' must be an array of pairs");
            std::vector<Diagonal> ds;
            for (const auto& item : j["diagonals"]) {
                if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
                    !item[1].is_number_integer())
                    throw Error(ErrorKind::ValidationError, "each diagonal must be a pair of integers");
                ds.emplace_back(item[0].get<VertexId>(), item[1].get<VertexId>());
            }
            doc.diagonals = std::move(ds);
        }
        if (j.contains("name")) {
            if (!j["name"].is_string())
                throw Error(ErrorKind::ValidationError, "field 'name' must be a string");
            doc.name = j["name"].get<std::string>();
        }
        for (const auto& [key, value] : j.items())
            if (key != "n" && key != "succ" && key != "diagonals" && key != "name")
                throw Error(ErrorKind::ValidationError, "unknown field '" + key + "'");
        doc.subdivided(); // surface polygon-core errors now
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ValidationError)
            throw;
        throw Error(ErrorKind::ValidationError, e.what());
    }
    return doc;
}

std::string serialize_polygon(const PolygonDocument& doc) {
    ordered_json j;
    j["n"] = doc.n;
    j["succ"] = doc.succ;
    if (doc.diagonals) {
        ordered_json ds = ordered_json::array();
        for (const Diagonal& d : *doc.diagonals)
            ds.push_back(ordered_json::array({d.u, d.v}));
        j["diagonals"] = std::move(ds);
    }
    if (doc.name)
        j["name"] = *doc.name;
    return j.dump() + "\n";
}

namespace {

constexpr double kRadius = 180.0;
constexpr double kCenter = 200.0;
constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

Point vertex_position(VertexId v, int n) {
    // Anticlockwise placement on screen (SVG y axis points down).
    double theta = 2.0 * kPi * v / n;
    return {kCenter + kRadius * std::cos(theta), kCenter - kRadius * std::sin(theta)};
}

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};
constexpr const char* kEdgeColor = "#222222";

// Marker ids are derived from the stroke color so arrowheads match it
// without SVG-2 context paint.
std::string marker_id(const std::string& color) {
    return "arrow-" + color.substr(1);
}

void emit_markers(std::ostringstream& out) {
    out << "  <defs>\n";
    std::vector<std::string> colors = {kEdgeColor};
    for (const char* c : kPalette)
        colors.push_back(c);
    for (const std::string& color : colors)
        out << "    <marker id=\"" << marker_id(color)
            << "\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"3\" orient=\"auto\">"
            << "<path d=\"M0,0 L7,3 L0,6 z\" fill=\"" << color << "\"/></marker>\n";
    out << "  </defs>\n";
}

void emit_line(std::ostringstream& out, Point a, Point b, const std::string& color, bool dashed, bool arrow) {
    out << "  <line x1=\"" << format_double(a.x) << "\" y1=\"" << format_double(a.y) << "\" x2=\""
        << format_double(b.x) << "\" y2=\"" << format_double(b.y) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"";
    if (dashed)
        out << " stroke-dasharray=\"6,4\"";
    if (arrow)
        out << " marker-end=\"url(#" << marker_id(color) << ")\"";
    out << "/>\n";
}

// Pull the endpoint slightly back so arrowheads stay outside vertex dots.
Point toward(Point from, Point to, double shorten) {
    double dx = to.x - from.x, dy = to.y - from.y;
    double len = std::sqrt(dx * dx + dy * dy);
    if (len < 1e-9)
        return to;
    double f = (len - shorten) / len;
    return {from.x + dx * f, from.y + dy * f};
}

} // namespace

std::string render_svg(const SubdividedPolygon& sp, const RenderOptions& options) {
    const int n = sp.size();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    emit_markers(out);
    out << "  <circle cx=\"" << format_double(kCenter) << "\" cy=\"" << format_double(kCenter) << "\" r=\""
        << format_double(kRadius) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

    auto color_of = [&](VertexId tail, VertexId head) -> std::string {
        for (size_t s = 0; s < options.stars.size(); ++s) {
            int i = cycle_index_of(options.stars[s], tail);
            if (i >= 0 && options.stars[s].at(i + 1) == head)
                return kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        }
        return kEdgeColor;
    };

    for (VertexId v = 0; v < n; ++v) {
        VertexId w = sp.polygon().succ(v);
        Point a = vertex_position(v, n), b = vertex_position(w, n);
        emit_line(out, a, toward(a, b, 7.0), color_of(v, w), false, true);
    }
    for (const Diagonal& d : sp.diagonals()) {
        Point a = vertex_position(d.u, n), b = vertex_position(d.v, n);
        if (options.stars.empty()) {
            emit_line(out, a, b, "#555555", true, false);
        } else {
            // Directed renditions of both orientations, colored per star.
            emit_line(out, a, toward(a, b, 7.0), color_of(d.u, d.v), true, true);
            emit_line(out, b, toward(b, a, 7.0), color_of(d.v, d.u), true, true);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        Point p = vertex_position(v, n);
        out << "  <circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y)
            << "\" r=\"3\" fill=\"#000000\"/>\n";
        if (options.labels) {
            Point t = {kCenter + (kRadius + 14.0) * (p.x - kCenter) / kRadius,
                       kCenter + (kRadius + 14.0) * (p.y - kCenter) / kRadius};
            out << "  <text x=\"" << format_double(t.x) << "\" y=\"" << format_double(t.y)
                << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const StarDecomposition& dec, bool labels) {
    RenderOptions options;
    options.labels = labels;
    options.stars = dec.stars;
    return render_svg(dec.base, options);
}

std::string to_dot(const FlipGraph& graph, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    std::map<CanonicalKey, size_t> ids;
    for (const auto& [key, dec] : graph.nodes) {
        size_t id = ids.size();
        ids.emplace(key, id);
        out << "  n" << id << " [label=\"" << key_to_string(key) << "\"];\n";
    }
    for (const FlipEdge& e : graph.edges) {
        out << "  n" << ids.at(e.a) << " -- n" << ids.at(e.b) << " [label=\"-" << e.removed.u << "-"
            << e.removed.v << " +" << e.added.u << "-" << e.added.v << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace stardec
