#include "stardec/border.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace stardec {

int angle_units(VertexId x, VertexId apex, VertexId y, int n) {
    if (x == y)
        return 0;
    return strict_between(x, apex, y, n) ? circular_gap(y, x, n) : circular_gap(x, y, n);
}

AngleSequenceKey angle_sequence_key(const CyclicPolygon& poly, const Star& star, VertexId v) {
    const int n = poly.size();
    int start = cycle_index_of(star, v);
    if (start < 0 || star.at(start - 1) != poly.pred(v))
        throw Error(ErrorKind::InvalidParameters, "star does not pass through the edge v- -> v");
    AngleSequenceKey key;
    const int m = star.length();
    for (int i = 2; i < m; i += 2)
        key.push_back(angle_units(star.at(start - 1 + i - 1), star.at(start - 1 + i), star.at(start - 1 + i + 1), n));
    return key;
}

namespace {

struct BorderSearch {
    const CyclicPolygon& poly;
    int n;
    std::vector<std::vector<bool>> linkable; // symmetric matrix
    VertexId v0, v1;
    std::vector<VertexId> cycle; // v0, v1, v2, ... current partial star
    std::vector<bool> used;
    std::optional<Star> found;

    BorderSearch(const CyclicPolygon& p, VertexId v) : poly(p), n(p.size()), v0(p.pred(v)), v1(v) {
        linkable.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
        for (const Diagonal& d : linkable_pairs(poly)) {
            linkable[static_cast<size_t>(d.u)][static_cast<size_t>(d.v)] = true;
            linkable[static_cast<size_t>(d.v)][static_cast<size_t>(d.u)] = true;
        }
        used.assign(static_cast<size_t>(n), false);
    }

    bool segment_exists(VertexId a, VertexId b) const {
        return poly.succ(a) == b || linkable[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    // The partial cycle stays star-feasible when the appended edge keeps all
    // triples anticlockwise and shares a point with every earlier edge.
    bool edge_compatible(VertexId a, VertexId b) const {
        for (size_t i = 0; i + 1 < cycle.size(); ++i) {
            VertexId c = cycle[i], d = cycle[i + 1];
            bool sharing = (a == c || a == d || b == c || b == d) || chords_cross(a, b, c, d, n);
            if (!sharing)
                return false;
        }
        return true;
    }

    bool try_close() {
        VertexId w = cycle.back();
        if (!segment_exists(w, v0))
            return false;
        if (!anticlockwise(cycle[cycle.size() - 2], w, v0, n) || !anticlockwise(w, v0, v1, n))
            return false;
        if (!edge_compatible(w, v0))
            return false;
        Star star;
        star.n = n;
        star.vertices = cycle;
        if (!is_star(star))
            return false;
        found = star.canonical();
        return true;
    }

    // Extends with odd vertex x and the forced polygon edge x -> succ(x).
    bool try_extend(VertexId x) {
        VertexId w = cycle.back();
        VertexId y = poly.succ(x);
        if (used[static_cast<size_t>(x)] || used[static_cast<size_t>(y)] || x == v0 || y == v0)
            return false;
        if (!segment_exists(w, x))
            return false;
        if (!anticlockwise(cycle[cycle.size() - 2], w, x, n) || !anticlockwise(w, x, y, n))
            return false;
        if (!edge_compatible(w, x))
            return false;
        cycle.push_back(x);
        if (!edge_compatible(x, y)) {
            cycle.pop_back();
            return false;
        }
        cycle.push_back(y);
        used[static_cast<size_t>(x)] = used[static_cast<size_t>(y)] = true;
        if (dfs())
            return true;
        used[static_cast<size_t>(x)] = used[static_cast<size_t>(y)] = false;
        cycle.pop_back();
        cycle.pop_back();
        return false;
    }

    // Children ordered by the angle entry they produce, so the first
    // completed star carries the lexicographically least angle sequence.
    bool dfs() {
        VertexId w = cycle.back();
        VertexId prev = cycle[cycle.size() - 2];
        std::vector<std::pair<int, VertexId>> options;
        options.reserve(static_cast<size_t>(n));
        options.emplace_back(circular_gap(v0, prev, n), v0);
        for (VertexId x = 0; x < n; ++x)
            if (x != v0 && x != w && x != prev)
                options.emplace_back(circular_gap(x, prev, n), x);
        std::sort(options.begin(), options.end());
        for (const auto& [units, x] : options) {
            if (x == v0) {
                if (try_close())
                    return true;
            } else if (try_extend(x)) {
                return true;
            }
        }
        return false;
    }

    std::optional<Star> run() {
        VertexId v2 = poly.succ(v1);
        cycle = {v0, v1, v2};
        used[static_cast<size_t>(v0)] = used[static_cast<size_t>(v1)] = used[static_cast<size_t>(v2)] = true;
        dfs();
        return found;
    }
};

} // namespace

std::optional<Star> border_star(const CyclicPolygon& poly, VertexId v) {
    if (v < 0 || v >= poly.size())
        throw Error(ErrorKind::InvalidParameters, "vertex out of range");
    BorderSearch search(poly, v);
    return search.run();
}

std::optional<ResidualPolygon> remove_star(const CyclicPolygon& poly, const Star& star) {
    const int n = poly.size();
    if (star.n != n)
        throw Error(ErrorKind::InvalidParameters, "star lives on a different circle");

    std::vector<VertexId> succ(poly.succ_vector());
    std::vector<bool> removed_out(static_cast<size_t>(n), false);
    std::vector<DirectedEdge> reversed;
    for (const DirectedEdge& e : star.edges()) {
        if (poly.succ(e.tail) == e.head) {
            removed_out[static_cast<size_t>(e.tail)] = true;
        } else {
            if (!(splits_angle(poly.pred(e.tail), e.tail, poly.succ(e.tail), e.head, n) &&
                  splits_angle(poly.pred(e.head), e.head, poly.succ(e.head), e.tail, n)))
                throw Error(ErrorKind::InvalidParameters,
                            "star edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                                " is neither a polygon edge nor a linkable segment");
            reversed.push_back({e.head, e.tail});
        }
    }

    std::vector<VertexId> out(static_cast<size_t>(n), -1);
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (VertexId u = 0; u < n; ++u) {
        if (!removed_out[static_cast<size_t>(u)]) {
            out[static_cast<size_t>(u)] = succ[static_cast<size_t>(u)];
            ++indeg[static_cast<size_t>(succ[static_cast<size_t>(u)])];
        }
    }
    for (const DirectedEdge& e : reversed) {
        if (out[static_cast<size_t>(e.tail)] != -1)
            throw Error(ErrorKind::ResidualNotCyclicPolygon,
                        "vertex " + std::to_string(e.tail) + " would have outdegree 2");
        out[static_cast<size_t>(e.tail)] = e.head;
        ++indeg[static_cast<size_t>(e.head)];
    }

    std::vector<VertexId> alive;
    for (VertexId u = 0; u < n; ++u) {
        bool has_out = out[static_cast<size_t>(u)] != -1;
        bool has_in = indeg[static_cast<size_t>(u)] > 0;
        if (has_out != has_in)
            throw Error(ErrorKind::ResidualNotCyclicPolygon,
                        "vertex " + std::to_string(u) + " has unbalanced degree in the residual");
        if (indeg[static_cast<size_t>(u)] > 1)
            throw Error(ErrorKind::ResidualNotCyclicPolygon,
                        "vertex " + std::to_string(u) + " has indegree 2 in the residual");
        if (has_out)
            alive.push_back(u);
    }
    if (alive.empty())
        return std::nullopt;

    std::vector<VertexId> compress(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < alive.size(); ++i)
        compress[static_cast<size_t>(alive[i])] = static_cast<VertexId>(i);
    std::vector<VertexId> new_succ(alive.size());
    for (size_t i = 0; i < alive.size(); ++i)
        new_succ[i] = compress[static_cast<size_t>(out[static_cast<size_t>(alive[i])])];

    try {
        CyclicPolygon residual = CyclicPolygon::validate(static_cast<int>(alive.size()), std::move(new_succ));
        return ResidualPolygon{std::move(residual), std::move(alive)};
    } catch (const Error& e) {
        throw Error(ErrorKind::ResidualNotCyclicPolygon, e.what());
    }
}

std::optional<StarDecomposition> peel_decomposition(const CyclicPolygon& poly) {
    std::vector<Star> collected;
    CyclicPolygon current = poly;
    std::vector<VertexId> to_original(static_cast<size_t>(poly.size()));
    for (VertexId v = 0; v < poly.size(); ++v)
        to_original[static_cast<size_t>(v)] = v;

    for (;;) {
        DirectedEdge uv = minimal_edges(current).front();
        std::optional<Star> bs = border_star(current, uv.head);
        if (!bs)
            return std::nullopt;

        Star original;
        original.n = poly.size();
        for (VertexId w : bs->vertices)
            original.vertices.push_back(to_original[static_cast<size_t>(w)]);
        collected.push_back(original.canonical());

        std::optional<ResidualPolygon> rest = remove_star(current, *bs);
        if (!rest)
            break;
        std::vector<VertexId> next_map(rest->to_parent.size());
        for (size_t i = 0; i < rest->to_parent.size(); ++i)
            next_map[i] = to_original[static_cast<size_t>(rest->to_parent[i])];
        current = std::move(rest->polygon);
        to_original = std::move(next_map);
    }

    std::vector<Diagonal> diagonals;
    for (const Star& s : collected)
        for (const DirectedEdge& e : s.edges())
            if (poly.succ(e.tail) != e.head)
                diagonals.emplace_back(e.tail, e.head);
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());

    StarDecomposition dec = [&] {
        try {
            return star_decomposition(poly, diagonals);
        } catch (const Error& e) {
            throw Error(ErrorKind::Internal, std::string("peeled stars do not reassemble: ") + e.what());
        }
    }();
    std::sort(collected.begin(), collected.end());
    if (collected != dec.stars)
        throw Error(ErrorKind::Internal, "peeled stars disagree with the cycle decomposition");
    return dec;
}

bool admits_star_decomposition(const CyclicPolygon& poly) {
    return peel_decomposition(poly).has_value();
}

StarPair find_constrained_linkable_pair(const CyclicPolygon& poly, const Star& sa, const Star& sb,
                                        VertexId a0, VertexId a1, VertexId b0, VertexId b1,
                                        VertexId x, VertexId y) {
    const int n = poly.size();
    auto has_edge = [](const Star& s, VertexId t, VertexId h) {
        int i = cycle_index_of(s, t);
        return i >= 0 && s.at(i + 1) == h;
    };
    if (!has_edge(sa, a0, a1) || !has_edge(sa, x, y))
        throw Error(ErrorKind::HypothesisViolated, "a0a1 and xy must be edges of the first star");
    if (!has_edge(sb, b0, b1))
        throw Error(ErrorKind::HypothesisViolated, "b0b1 must be an edge of the second star");
    // b0, y, b1, a0, x in anticlockwise order.
    const VertexId seq[5] = {b0, y, b1, a0, x};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (seq[i] == seq[j])
                throw Error(ErrorKind::HypothesisViolated, "the five anchor vertices must be distinct");
    int last = 0;
    for (int i = 1; i < 5; ++i) {
        int g = circular_gap(b0, seq[i], n);
        if (g <= last)
            throw Error(ErrorKind::HypothesisViolated, "b0, y, b1, a0, x are not in anticlockwise order");
        last = g;
    }
    if (circular_gap(x, a1, n) > circular_gap(x, b0, n))
        throw Error(ErrorKind::HypothesisViolated, "a1 must lie on the closed arc from x to b0");
    std::vector<DirectedEdge> minimals = minimal_edges(poly);
    if (std::find(minimals.begin(), minimals.end(), DirectedEdge{x, y}) == minimals.end())
        throw Error(ErrorKind::HypothesisViolated, "xy must be a minimal edge of the polygon");

    for (const StarPair& p : linkable_pairs_between(sa, sb))
        if (circular_gap(x, p.first, n) <= circular_gap(x, a1, n))
            return p;
    throw Error(ErrorKind::Internal, "no linkable pair on the guaranteed arc");
}

namespace {

int star_with_edge(const StarDecomposition& dec, DirectedEdge e) {
    for (size_t s = 0; s < dec.stars.size(); ++s) {
        int i = cycle_index_of(dec.stars[s], e.tail);
        if (i >= 0 && dec.stars[s].at(i + 1) == e.head)
            return static_cast<int>(s);
    }
    throw Error(ErrorKind::Internal, "no star contains the requested edge");
}

// Refined angle sequence of the star through uv: at odd positions the gap between
// the polygon successor ray and the actual next ray, at even positions the
// plain angle.
std::vector<int> theta_sequence(const StarDecomposition& dec, DirectedEdge uv) {
    const CyclicPolygon& poly = dec.polygon();
    const int n = poly.size();
    const Star& star = dec.stars[static_cast<size_t>(star_with_edge(dec, uv))];
    int base = cycle_index_of(star, uv.tail);
    const int m = star.length();
    std::vector<int> theta;
    theta.reserve(static_cast<size_t>(m - 1));
    for (int i = 1; i < m; ++i) {
        VertexId prev = star.at(base + i - 1);
        VertexId cur = star.at(base + i);
        VertexId next = star.at(base + i + 1);
        if (i % 2 == 1)
            theta.push_back(angle_units(prev, cur, poly.succ(cur), n) - angle_units(prev, cur, next, n));
        else
            theta.push_back(angle_units(prev, cur, next, n));
    }
    return theta;
}

std::string key_string(const std::vector<Diagonal>& diagonals) {
    std::string out;
    for (const Diagonal& d : diagonals)
        out += std::to_string(d.u) + "," + std::to_string(d.v) + ";";
    return out;
}

} // namespace

NormalizeResult normalize_to_border_star(const StarDecomposition& dec, DirectedEdge uv) {
    const CyclicPolygon& poly = dec.polygon();
    if (!is_maximal(dec))
        throw Error(ErrorKind::NotMaximal, "normalization needs a maximal decomposition");
    std::vector<DirectedEdge> minimals = minimal_edges(poly);
    if (std::find(minimals.begin(), minimals.end(), uv) == minimals.end())
        throw Error(ErrorKind::NotMinimalEdge,
                    std::to_string(uv.tail) + "->" + std::to_string(uv.head) + " is not a minimal edge");

    std::optional<Star> target = border_star(poly, uv.head);
    if (!target)
        throw Error(ErrorKind::Internal, "a maximal decomposition exists but the border star is absent");

    NormalizeResult result{dec, {}};
    auto reached = [&](const StarDecomposition& d) {
        return d.stars[static_cast<size_t>(star_with_edge(d, uv))] == *target;
    };

    // Greedy descent on the angle sequence of the star through uv.
    std::vector<int> current_theta = theta_sequence(result.decomposition, uv);
    while (!reached(result.decomposition)) {
        bool improved = false;
        std::optional<FlipResult> best;
        Diagonal best_removed;
        std::vector<int> best_theta;
        for (const Diagonal& e : result.decomposition.diagonals()) {
            FlipResult cand = diagonal_flip(result.decomposition, e);
            std::vector<int> theta = theta_sequence(cand.decomposition, uv);
            if (std::lexicographical_compare(theta.begin(), theta.end(), current_theta.begin(),
                                             current_theta.end()) &&
                (!best || std::lexicographical_compare(theta.begin(), theta.end(), best_theta.begin(),
                                                       best_theta.end()))) {
                best = std::move(cand);
                best_removed = e;
                best_theta = std::move(theta);
                improved = true;
            }
        }
        if (!improved)
            break;
        result.flips.emplace_back(best_removed, best->added);
        result.decomposition = std::move(best->decomposition);
        current_theta = std::move(best_theta);
    }
    if (reached(result.decomposition))
        return result;

    // Fallback: breadth-first search over the flip graph for a decomposition
    // containing the border star.
    struct Parent {
        std::string key;
        Diagonal removed, added;
    };
    std::map<std::string, StarDecomposition> nodes;
    std::map<std::string, Parent> parents;
    std::deque<std::string> queue;
    std::string start = key_string(result.decomposition.diagonals());
    nodes.emplace(start, result.decomposition);
    queue.push_back(start);
    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        StarDecomposition node = nodes.at(key);
        for (const Diagonal& e : node.diagonals()) {
            FlipResult flipped = diagonal_flip(node, e);
            std::string next = key_string(flipped.decomposition.diagonals());
            if (nodes.count(next))
                continue;
            parents[next] = Parent{key, e, flipped.added};
            bool done = reached(flipped.decomposition);
            nodes.emplace(next, std::move(flipped.decomposition));
            if (done) {
                std::vector<std::pair<Diagonal, Diagonal>> tail;
                for (std::string at = next; at != start; at = parents.at(at).key)
                    tail.emplace_back(parents.at(at).removed, parents.at(at).added);
                std::reverse(tail.begin(), tail.end());
                for (const auto& f : tail)
                    result.flips.push_back(f);
                result.decomposition = nodes.at(next);
                return result;
            }
            queue.push_back(next);
        }
    }
    throw Error(ErrorKind::Internal, "flip search exhausted without reaching the border star");
}

} // namespace stardec
