#ifndef STARDEC_BORDER_HPP
#define STARDEC_BORDER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stardec/transform.hpp"

namespace stardec {

// Inscribed angle at apex between rays to x and y, in units of pi/n: the
// number of circle positions on the arc between x and y avoiding the apex.
// Exact under the canonical uniform placement.
int angle_units(VertexId x, VertexId apex, VertexId y, int n);

// Lexicographically comparable angle sequence (angle at v2, at v4, ...) of a
// border-star candidate, one entry per even-position apex.
using AngleSequenceKey = std::vector<int>;

AngleSequenceKey angle_sequence_key(const CyclicPolygon& poly, const Star& star, VertexId v);

// The border star S*(P, v): the star through the polygon edges v- -> v -> v+
// whose odd-to-even edges are polygon edges, minimizing the angle sequence.
// Returns nullopt when no such star exists.
std::optional<Star> border_star(const CyclicPolygon& poly, VertexId v);

struct ResidualPolygon {
    CyclicPolygon polygon;
    std::vector<VertexId> to_parent; // residual index -> index in the parent polygon
};

// Removes a star whose edges all lie in E union the linkable segments: the
// star's polygon edges disappear and its remaining edges are reversed into
// new polygon edges. Returns nullopt when nothing is left. Throws
// ResidualNotCyclicPolygon when the residual violates polygon invariants.
std::optional<ResidualPolygon> remove_star(const CyclicPolygon& poly, const Star& star);

// Peels border stars off the head of the smallest-tail minimal edge until
// the polygon is exhausted; reassembles the collected stars into a validated
// decomposition. Returns nullopt when some peel step finds no border star.
std::optional<StarDecomposition> peel_decomposition(const CyclicPolygon& poly);

bool admits_star_decomposition(const CyclicPolygon& poly);

// Constrained search: a linkable pair (a, b) of (sa, sb) with a on the
// closed arc from x to a1, given a hypothesis set that guarantees one
// exists (checked; throws HypothesisViolated). Coming up empty is an
// internal error.
StarPair find_constrained_linkable_pair(const CyclicPolygon& poly, const Star& sa, const Star& sb,
                                        VertexId a0, VertexId a1, VertexId b0, VertexId b1,
                                        VertexId x, VertexId y);

struct NormalizeResult {
    StarDecomposition decomposition;
    std::vector<std::pair<Diagonal, Diagonal>> flips; // (removed, added) per step
};

// Flips a maximal decomposition until the star through the minimal edge uv
// is the border star S*(P, head(uv)): greedy descent on a refined angle
// sequence, with breadth-first search over the flip graph as a fallback.
// Throws NotMaximal or NotMinimalEdge.
NormalizeResult normalize_to_border_star(const StarDecomposition& dec, DirectedEdge uv);

} // namespace stardec

#endif
