#ifndef STARDEC_IO_HPP
#define STARDEC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "stardec/explorer.hpp"
#include "stardec/star.hpp"

namespace stardec {

// On-disk polygon description: JSON object {n, succ, diagonals?, name?}.
// The geometry is fully combinatorial, so no coordinates are stored.
struct PolygonDocument {
    int n = 0;
    std::vector<VertexId> succ;
    std::optional<std::vector<Diagonal>> diagonals;
    std::optional<std::string> name;

    CyclicPolygon polygon() const { return CyclicPolygon::validate(n, succ); }
    SubdividedPolygon subdivided() const {
        return SubdividedPolygon::make(polygon(), diagonals.value_or(std::vector<Diagonal>{}));
    }

    friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

// Parses and validates; throws SyntaxError for malformed JSON and
// ValidationError wrapping polygon-core errors with field context.
PolygonDocument parse_polygon(const std::string& text);

// Canonical serialization: parse(serialize(doc)) == doc and serialize is a
// fixed point on canonical text.
std::string serialize_polygon(const PolygonDocument& doc);

struct RenderOptions {
    bool labels = true;
    std::vector<Star> stars; // when non-empty, edges are colored per star
};

// Deterministic SVG: fixed-radius circle, vertices at canonical positions,
// stable element order; identical input gives identical bytes.
std::string render_svg(const SubdividedPolygon& sp, const RenderOptions& options = {});
std::string render_svg(const StarDecomposition& dec, bool labels = true);

// Graphviz DOT text of a flip graph, nodes labelled by diagonal sets.
std::string to_dot(const FlipGraph& graph, const std::string& name = "flipgraph");

} // namespace stardec

#endif
