#include "stardec/polygon.hpp"

#include <algorithm>
#include <string>

namespace stardec {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::HasLoop: return "HasLoop";
        case ErrorKind::HasTwoCycle: return "HasTwoCycle";
        case ErrorKind::NotAnticlockwise: return "NotAnticlockwise";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::DegenerateAngle: return "DegenerateAngle";
        case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
        case ErrorKind::DiagonalNotLinkable: return "DiagonalNotLinkable";
        case ErrorKind::NotAStarDecomposition: return "NotAStarDecomposition";
        case ErrorKind::NotIndependent: return "NotIndependent";
        case ErrorKind::OddTotal: return "OddTotal";
        case ErrorKind::NotLinkablePair: return "NotLinkablePair";
        case ErrorKind::PairsEqual: return "PairsEqual";
        case ErrorKind::NotMaximal: return "NotMaximal";
        case ErrorKind::DiagonalNotInD: return "DiagonalNotInD";
        case ErrorKind::ResidualNotCyclicPolygon: return "ResidualNotCyclicPolygon";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::NotMinimalEdge: return "NotMinimalEdge";
        case ErrorKind::KeyNotFound: return "KeyNotFound";
        case ErrorKind::InvalidParameters: return "InvalidParameters";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

CyclicPolygon CyclicPolygon::validate(int n, std::vector<VertexId> succ) {
    if (n < 3)
        throw Error(ErrorKind::TooSmall, "a cyclic polygon needs at least 3 vertices, got n=" + std::to_string(n));
    if (static_cast<int>(succ.size()) != n)
        throw Error(ErrorKind::NotAPermutation,
                    "succ has " + std::to_string(succ.size()) + " entries, expected " + std::to_string(n));

    std::vector<VertexId> pred(static_cast<size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
        VertexId w = succ[static_cast<size_t>(v)];
        if (w < 0 || w >= n)
            throw Error(ErrorKind::NotAPermutation,
                        "succ(" + std::to_string(v) + ") = " + std::to_string(w) + " is out of range");
        if (pred[static_cast<size_t>(w)] != -1)
            throw Error(ErrorKind::NotAPermutation, "vertex " + std::to_string(w) + " has indegree > 1");
        pred[static_cast<size_t>(w)] = v;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (succ[static_cast<size_t>(v)] == v)
            throw Error(ErrorKind::HasLoop, "succ(" + std::to_string(v) + ") = " + std::to_string(v));
        if (succ[static_cast<size_t>(succ[static_cast<size_t>(v)])] == v)
            throw Error(ErrorKind::HasTwoCycle,
                        "vertices " + std::to_string(v) + " and " + std::to_string(succ[static_cast<size_t>(v)]) +
                            " form a 2-cycle");
    }
    // Consecutive edges u->v->w must run anticlockwise; equivalently the two
    // edge lengths at v together are shorter than the full circle.
    for (VertexId v = 0; v < n; ++v) {
        VertexId p = pred[static_cast<size_t>(v)];
        VertexId s = succ[static_cast<size_t>(v)];
        if (!anticlockwise(p, v, s, n))
            throw Error(ErrorKind::NotAnticlockwise,
                        "triple (" + std::to_string(p) + ", " + std::to_string(v) + ", " + std::to_string(s) +
                            ") is not anticlockwise");
    }
    return CyclicPolygon(n, std::move(succ), std::move(pred));
}

int CyclicPolygon::rotation_number() const {
    long long total = 0;
    for (VertexId v = 0; v < n_; ++v)
        total += edge_length(v);
    // Sum of (succ(v) - v) over a permutation is 0 mod n.
    return static_cast<int>(total / n_);
}

std::vector<DirectedEdge> CyclicPolygon::edges() const {
    std::vector<DirectedEdge> result;
    result.reserve(static_cast<size_t>(n_));
    for (VertexId v = 0; v < n_; ++v)
        result.push_back({v, succ(v)});
    return result;
}

CyclicPolygon convex_polygon(int n) {
    std::vector<VertexId> succ(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        succ[static_cast<size_t>(v)] = (v + 1) % n;
    return CyclicPolygon::validate(n, std::move(succ));
}

CyclicPolygon regular_star_polygon(int n, int k) {
    if (k < 1 || 2 * k + 1 > n)
        throw Error(ErrorKind::InvalidParameters,
                    "P_n^k needs 1 <= k and 2k+1 <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    std::vector<VertexId> succ(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        succ[static_cast<size_t>(v)] = (v + k) % n;
    return CyclicPolygon::validate(n, std::move(succ));
}

bool splits_angle(VertexId pred, VertexId apex, VertexId succv, VertexId x, int n) {
    if (pred == succv || apex == pred || apex == succv)
        throw Error(ErrorKind::DegenerateAngle,
                    "angle (" + std::to_string(pred) + ", " + std::to_string(apex) + ", " + std::to_string(succv) +
                        ") is degenerate");
    if (x == pred || x == apex || x == succv)
        return false;
    // The chord apex->x sweeps the angle monotonically as x travels the arc
    // from succv to pred that avoids the apex.
    return strict_between(succv, x, pred, n);
}

std::vector<Diagonal> linkable_pairs(const CyclicPolygon& poly) {
    const int n = poly.size();
    std::vector<Diagonal> result;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (splits_angle(poly.pred(u), u, poly.succ(u), v, n) &&
                splits_angle(poly.pred(v), v, poly.succ(v), u, n))
                result.emplace_back(u, v);
        }
    }
    return result;
}

std::vector<DirectedEdge> minimal_edges(const CyclicPolygon& poly) {
    const int n = poly.size();
    std::vector<DirectedEdge> result;
    for (VertexId u = 0; u < n; ++u) {
        VertexId v = poly.succ(u);
        int span = circular_gap(u, v, n);
        bool minimal = true;
        for (VertexId x = 0; x < n && minimal; ++x) {
            if (x == u)
                continue;
            int a = circular_gap(u, x, n);
            int b = circular_gap(u, poly.succ(x), n);
            if (0 < a && a < b && b < span)
                minimal = false;
        }
        if (minimal)
            result.push_back({u, v});
    }
    return result;
}

} // namespace stardec
