#ifndef STARDEC_POLYGON_HPP
#define STARDEC_POLYGON_HPP

#include <cstdint>
#include <vector>

#include "stardec/errors.hpp"

namespace stardec {

// Vertices are indices 0..n-1 placed anticlockwise at canonical uniform
// positions on a circle (vertex i at fraction i/n). All geometry in this
// library reduces to cyclic-order arithmetic on these indices.
using VertexId = std::int32_t;

// Anticlockwise gap from a to b on an n-point circle, in [0, n).
inline int circular_gap(VertexId a, VertexId b, int n) {
    int d = (b - a) % n;
    return d < 0 ? d + n : d;
}

// True iff x lies on the open anticlockwise arc from a to b. Total: false
// whenever a == b or x coincides with an endpoint.
inline bool strict_between(VertexId a, VertexId x, VertexId b, int n) {
    int gx = circular_gap(a, x, n);
    return gx != 0 && gx < circular_gap(a, b, n);
}

// Three distinct points a, b, c are arranged in anticlockwise order.
inline bool anticlockwise(VertexId a, VertexId b, VertexId c, int n) {
    return strict_between(a, b, c, n);
}

struct Diagonal {
    VertexId u;
    VertexId v;

    Diagonal() : u(0), v(0) {}
    Diagonal(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

struct DirectedEdge {
    VertexId tail;
    VertexId head;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// A cyclic polygon: every vertex has indegree and outdegree 1 along succ,
// no loops, no 2-cycles, and every consecutive edge pair u->v->w runs
// anticlockwise. The edge set may consist of several disjoint cycles.
class CyclicPolygon {
public:
    // Validates and constructs. Throws Error with kind NotAPermutation,
    // HasLoop, HasTwoCycle, NotAnticlockwise or TooSmall.
    static CyclicPolygon validate(int n, std::vector<VertexId> succ);

    int size() const { return n_; }
    VertexId succ(VertexId v) const { return succ_[static_cast<size_t>(v)]; }
    VertexId pred(VertexId v) const { return pred_[static_cast<size_t>(v)]; }
    const std::vector<VertexId>& succ_vector() const { return succ_; }

    // Number of vertices on the half-open arc (v, succ(v)].
    int edge_length(VertexId v) const { return circular_gap(v, succ(v), n_); }

    // (sum of exterior angles) / 2pi; combinatorially sum of lengths / n.
    int rotation_number() const;

    std::vector<DirectedEdge> edges() const;

    friend bool operator==(const CyclicPolygon&, const CyclicPolygon&) = default;

private:
    CyclicPolygon(int n, std::vector<VertexId> succ, std::vector<VertexId> pred)
        : n_(n), succ_(std::move(succ)), pred_(std::move(pred)) {}

    int n_;
    std::vector<VertexId> succ_;
    std::vector<VertexId> pred_;
};

// Convex n-gon: succ(v) = v+1.
CyclicPolygon convex_polygon(int n);

// P_n^k: succ(v) = v+k mod n; requires 2k+1 <= n.
CyclicPolygon regular_star_polygon(int n, int k);

// True iff the segment apex-x splits the angle pred-apex-succv into two
// smaller angles. (pred, apex, succv) must be an anticlockwise triple;
// then the predicate is membership of x in the open arc from succv to pred.
// Throws DegenerateAngle when pred == succv or apex is an endpoint.
bool splits_angle(VertexId pred, VertexId apex, VertexId succv, VertexId x, int n);

// All unordered pairs {u, v} whose segment splits the polygon angle at both
// endpoints; sorted by (u, v).
std::vector<Diagonal> linkable_pairs(const CyclicPolygon& poly);

// Edges uv of E such that no other edge together with its closed arc lies
// strictly inside the open arc (u, v); sorted by tail index.
std::vector<DirectedEdge> minimal_edges(const CyclicPolygon& poly);

} // namespace stardec

#endif
