#ifndef STARDEC_STAR_HPP
#define STARDEC_STAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "stardec/polygon.hpp"

namespace stardec {

// True iff chords {a,b} and {c,d} share no endpoint and intersect strictly
// inside the circle.
bool chords_cross(VertexId a, VertexId b, VertexId c, VertexId d, int n);

// An oriented cycle on an n-point circle; edges run cycle[i] -> cycle[i+1]
// with wraparound. Cycles produced by cycle_decomposition may repeat a
// vertex; stars never do.
struct OrientedCycle {
    int n = 0;
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    VertexId at(int i) const {
        int m = length();
        return vertices[static_cast<size_t>(((i % m) + m) % m)];
    }

    // Rotates so the lexicographically smallest (tail, head) edge is first.
    OrientedCycle canonical() const;

    std::vector<DirectedEdge> edges() const;
    std::string to_string() const;

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
    friend auto operator<=>(const OrientedCycle&, const OrientedCycle&) = default;
};

// A k-star: odd cycle with distinct vertices, anticlockwise consecutive
// triples, and every two edges sharing a common point. Construct via
// make_star (validating) or by trusting is_star.
using Star = OrientedCycle;

// Full star test: odd length >= 3, distinct vertices, anticlockwise triples,
// pairwise common points.
bool is_star(const OrientedCycle& cycle);

// Equivalent local characterization: within the circular sorted order of the
// cycle's own vertices, every edge advances exactly (m-1)/2 positions.
// Exposed for property tests against is_star.
bool is_star_by_jump(const OrientedCycle& cycle);

Star make_star(const OrientedCycle& cycle); // throws ValidationError if not a star

// Index of v inside the cycle, or -1.
int cycle_index_of(const OrientedCycle& cycle, VertexId v);

// A cyclic polygon together with a set of diagonals drawn from its linkable
// pairs. Diagonals are kept sorted and unique.
class SubdividedPolygon {
public:
    static SubdividedPolygon make(CyclicPolygon poly, std::vector<Diagonal> diagonals);

    const CyclicPolygon& polygon() const { return poly_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    int size() const { return poly_.size(); }

    // Diagonal partners of v, unsorted.
    const std::vector<VertexId>& partners(VertexId v) const {
        return partners_[static_cast<size_t>(v)];
    }

    bool has_directed_edge(VertexId u, VertexId v) const;

    friend bool operator==(const SubdividedPolygon&, const SubdividedPolygon&) = default;

private:
    SubdividedPolygon(CyclicPolygon poly, std::vector<Diagonal> diagonals,
                      std::vector<std::vector<VertexId>> partners)
        : poly_(std::move(poly)), diagonals_(std::move(diagonals)), partners_(std::move(partners)) {}

    CyclicPolygon poly_;
    std::vector<Diagonal> diagonals_;
    std::vector<std::vector<VertexId>> partners_;
};

// Successor of edge u->v in the traversal of E union both diagonal
// orientations: at v the segments v-, d1, ..., dm, v+ are fanned clockwise
// from v-, and the result heads to the entry right after u. Bijective.
// Throws EdgeNotPresent if u->v is not in E union D-tilde.
DirectedEdge f_next(const SubdividedPolygon& sp, DirectedEdge e);

// Partition of E union D-tilde into orbits of f_next. Cycles are
// canonicalized and sorted by first edge.
std::vector<OrientedCycle> cycle_decomposition(const SubdividedPolygon& sp);

// Independence of a family of stars: no two angles of distinct stars share
// an apex with intersecting half-open arcs.
bool independence_check(const std::vector<Star>& stars);

struct StarDecomposition {
    SubdividedPolygon base;
    std::vector<Star> stars;

    const CyclicPolygon& polygon() const { return base.polygon(); }
    const std::vector<Diagonal>& diagonals() const { return base.diagonals(); }

    friend bool operator==(const StarDecomposition&, const StarDecomposition&) = default;
};

class NotAStarDecompositionError : public Error {
public:
    NotAStarDecompositionError(std::vector<OrientedCycle> offenders, const std::string& message)
        : Error(ErrorKind::NotAStarDecomposition, message), offenders_(std::move(offenders)) {}

    const std::vector<OrientedCycle>& offending_cycles() const { return offenders_; }

private:
    std::vector<OrientedCycle> offenders_;
};

// Runs cycle_decomposition and succeeds iff every cycle is a star. Validates
// the n-2r star count and mutual independence of the result.
// Throws DiagonalNotLinkable or NotAStarDecompositionError.
StarDecomposition star_decomposition(const CyclicPolygon& poly, const std::vector<Diagonal>& diagonals);

// Non-throwing variant for search loops.
std::optional<StarDecomposition> try_star_decomposition(const CyclicPolygon& poly,
                                                        const std::vector<Diagonal>& diagonals);

// Maximality fast path: every pair of distinct stars has exactly one
// linkable pair between them.
bool is_maximal(const StarDecomposition& dec);

} // namespace stardec

#endif
