#include "stardec/star.hpp"

#include <algorithm>
#include <sstream>

#include "stardec/transform.hpp"

namespace stardec {

bool chords_cross(VertexId a, VertexId b, VertexId c, VertexId d, int n) {
    if (a == c || a == d || b == c || b == d)
        return false;
    return strict_between(a, c, b, n) != strict_between(a, d, b, n);
}

OrientedCycle OrientedCycle::canonical() const {
    const int m = length();
    if (m == 0)
        return *this;
    int best = 0;
    for (int i = 1; i < m; ++i) {
        auto edge = std::pair(at(i), at(i + 1));
        if (edge < std::pair(at(best), at(best + 1)))
            best = i;
    }
    OrientedCycle out;
    out.n = n;
    out.vertices.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out.vertices.push_back(at(best + i));
    return out;
}

std::vector<DirectedEdge> OrientedCycle::edges() const {
    std::vector<DirectedEdge> result;
    const int m = length();
    result.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        result.push_back({at(i), at(i + 1)});
    return result;
}

std::string OrientedCycle::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < length(); ++i) {
        if (i)
            out << " ";
        out << vertices[static_cast<size_t>(i)];
    }
    out << ")";
    return out.str();
}

int cycle_index_of(const OrientedCycle& cycle, VertexId v) {
    for (int i = 0; i < cycle.length(); ++i)
        if (cycle.vertices[static_cast<size_t>(i)] == v)
            return i;
    return -1;
}

bool is_star(const OrientedCycle& cycle) {
    const int m = cycle.length();
    const int n = cycle.n;
    if (m < 3 || m % 2 == 0)
        return false;
    std::vector<VertexId> sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (sorted.front() < 0 || sorted.back() >= n)
        return false;
    for (int i = 0; i < m; ++i)
        if (!anticlockwise(cycle.at(i - 1), cycle.at(i), cycle.at(i + 1), n))
            return false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            VertexId a = cycle.at(i), b = cycle.at(i + 1);
            VertexId c = cycle.at(j), d = cycle.at(j + 1);
            bool shared = (a == c || a == d || b == c || b == d);
            if (!shared && !chords_cross(a, b, c, d, n))
                return false;
        }
    }
    return true;
}

bool is_star_by_jump(const OrientedCycle& cycle) {
    const int m = cycle.length();
    if (m < 3 || m % 2 == 0)
        return false;
    std::vector<VertexId> sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    auto rank = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    const int k = (m - 1) / 2;
    for (int i = 0; i < m; ++i) {
        int jump = (rank(cycle.at(i + 1)) - rank(cycle.at(i)) + m) % m;
        if (jump != k)
            return false;
    }
    return true;
}

Star make_star(const OrientedCycle& cycle) {
    if (!is_star(cycle))
        throw Error(ErrorKind::ValidationError, "cycle " + cycle.to_string() + " is not a star");
    return cycle.canonical();
}

SubdividedPolygon SubdividedPolygon::make(CyclicPolygon poly, std::vector<Diagonal> diagonals) {
    const int n = poly.size();
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    for (const Diagonal& d : diagonals) {
        if (d.u == d.v || d.u < 0 || d.v >= n)
            throw Error(ErrorKind::DiagonalNotLinkable,
                        "pair {" + std::to_string(d.u) + "," + std::to_string(d.v) + "} is not a vertex pair");
        bool ok = splits_angle(poly.pred(d.u), d.u, poly.succ(d.u), d.v, n) &&
                  splits_angle(poly.pred(d.v), d.v, poly.succ(d.v), d.u, n);
        if (!ok)
            throw Error(ErrorKind::DiagonalNotLinkable,
                        "{" + std::to_string(d.u) + "," + std::to_string(d.v) + "} is not a linkable pair");
    }
    std::vector<std::vector<VertexId>> partners(static_cast<size_t>(n));
    for (const Diagonal& d : diagonals) {
        partners[static_cast<size_t>(d.u)].push_back(d.v);
        partners[static_cast<size_t>(d.v)].push_back(d.u);
    }
    return SubdividedPolygon(std::move(poly), std::move(diagonals), std::move(partners));
}

bool SubdividedPolygon::has_directed_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size() || u == v)
        return false;
    if (poly_.succ(u) == v)
        return true;
    const auto& ps = partners(u);
    return std::find(ps.begin(), ps.end(), v) != ps.end();
}

namespace {

// Fan at v: predecessor, diagonal partners, successor, ordered clockwise
// from the predecessor (decreasing anticlockwise gap from v).
std::vector<VertexId> fan_at(const SubdividedPolygon& sp, VertexId v) {
    const int n = sp.size();
    std::vector<VertexId> fan;
    fan.reserve(sp.partners(v).size() + 2);
    fan.push_back(sp.polygon().pred(v));
    for (VertexId d : sp.partners(v))
        fan.push_back(d);
    fan.push_back(sp.polygon().succ(v));
    std::sort(fan.begin(), fan.end(),
              [&](VertexId a, VertexId b) { return circular_gap(v, a, n) > circular_gap(v, b, n); });
    return fan;
}

} // namespace

DirectedEdge f_next(const SubdividedPolygon& sp, DirectedEdge e) {
    if (!sp.has_directed_edge(e.tail, e.head))
        throw Error(ErrorKind::EdgeNotPresent,
                    std::to_string(e.tail) + "->" + std::to_string(e.head) + " is not in E union D-tilde");
    std::vector<VertexId> fan = fan_at(sp, e.head);
    for (size_t i = 0; i + 1 < fan.size(); ++i)
        if (fan[i] == e.tail)
            return {e.head, fan[i + 1]};
    throw Error(ErrorKind::Internal, "incoming edge not found in fan");
}

std::vector<OrientedCycle> cycle_decomposition(const SubdividedPolygon& sp) {
    const int n = sp.size();
    std::vector<DirectedEdge> all;
    for (VertexId v = 0; v < n; ++v)
        all.push_back({v, sp.polygon().succ(v)});
    for (const Diagonal& d : sp.diagonals()) {
        all.push_back({d.u, d.v});
        all.push_back({d.v, d.u});
    }
    std::sort(all.begin(), all.end());

    // Precompute fans once; each f_next step is then a lookup.
    std::vector<std::vector<VertexId>> fans(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        fans[static_cast<size_t>(v)] = fan_at(sp, v);
    auto step = [&](DirectedEdge e) -> DirectedEdge {
        const auto& fan = fans[static_cast<size_t>(e.head)];
        for (size_t i = 0; i + 1 < fan.size(); ++i)
            if (fan[i] == e.tail)
                return {e.head, fan[i + 1]};
        throw Error(ErrorKind::Internal, "f_next fan lookup failed");
    };

    std::vector<bool> seen(all.size(), false);
    auto edge_index = [&](DirectedEdge e) {
        auto it = std::lower_bound(all.begin(), all.end(), e);
        if (it == all.end() || !(*it == e))
            throw Error(ErrorKind::Internal, "f_next left the edge set");
        return static_cast<size_t>(it - all.begin());
    };

    std::vector<OrientedCycle> cycles;
    for (size_t start = 0; start < all.size(); ++start) {
        if (seen[start])
            continue;
        OrientedCycle cycle;
        cycle.n = n;
        DirectedEdge e = all[start];
        do {
            size_t idx = edge_index(e);
            if (seen[idx])
                throw Error(ErrorKind::Internal, "f_next is not a bijection");
            seen[idx] = true;
            cycle.vertices.push_back(e.tail);
            e = step(e);
        } while (!(e == all[start]));
        cycles.push_back(cycle.canonical());
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

// Membership in the half-open arc (z, x]: open at z, closed at x.
bool in_half_open_arc(VertexId z, VertexId x, VertexId t, int n) {
    int gt = circular_gap(z, t, n);
    return gt != 0 && gt <= circular_gap(z, x, n);
}

// Angles arriving from x and leaving to z at a shared apex are overlapped
// when the half-open arcs (z1, x1] and (z2, x2] intersect.
bool angles_overlap(VertexId x1, VertexId z1, VertexId x2, VertexId z2, int n) {
    return in_half_open_arc(z2, x2, x1, n) || in_half_open_arc(z1, x1, x2, n);
}

} // namespace

bool independence_check(const std::vector<Star>& stars) {
    for (size_t a = 0; a < stars.size(); ++a) {
        for (size_t b = a + 1; b < stars.size(); ++b) {
            const Star& sa = stars[a];
            const Star& sb = stars[b];
            const int n = sa.n;
            for (int i = 0; i < sa.length(); ++i) {
                int j = cycle_index_of(sb, sa.at(i));
                if (j < 0)
                    continue;
                if (angles_overlap(sa.at(i - 1), sa.at(i + 1), sb.at(j - 1), sb.at(j + 1), n))
                    return false;
            }
        }
    }
    return true;
}

StarDecomposition star_decomposition(const CyclicPolygon& poly, const std::vector<Diagonal>& diagonals) {
    SubdividedPolygon sp = SubdividedPolygon::make(poly, diagonals);
    std::vector<OrientedCycle> cycles = cycle_decomposition(sp);
    std::vector<OrientedCycle> offenders;
    for (const OrientedCycle& c : cycles)
        if (!is_star(c))
            offenders.push_back(c);
    if (!offenders.empty()) {
        std::ostringstream msg;
        msg << offenders.size() << " of " << cycles.size() << " cycles are not stars, first offender "
            << offenders.front().to_string();
        throw NotAStarDecompositionError(std::move(offenders), msg.str());
    }
    const int expected = poly.size() - 2 * poly.rotation_number();
    if (static_cast<int>(cycles.size()) != expected)
        throw Error(ErrorKind::Internal,
                    "star decomposition has " + std::to_string(cycles.size()) + " stars, expected n-2r = " +
                        std::to_string(expected));
    if (!independence_check(cycles))
        throw Error(ErrorKind::Internal, "star decomposition is not independent");
    return StarDecomposition{std::move(sp), std::move(cycles)};
}

std::optional<StarDecomposition> try_star_decomposition(const CyclicPolygon& poly,
                                                        const std::vector<Diagonal>& diagonals) {
    try {
        return star_decomposition(poly, diagonals);
    } catch (const NotAStarDecompositionError&) {
        return std::nullopt;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DiagonalNotLinkable)
            return std::nullopt;
        throw;
    }
}

bool is_maximal(const StarDecomposition& dec) {
    // Fast path: a pair of independent stars always has an odd
    // number of linkable pairs, and any pair with >= 3 admits a subdivision.
    for (size_t a = 0; a < dec.stars.size(); ++a)
        for (size_t b = a + 1; b < dec.stars.size(); ++b)
            if (linkable_pairs_between(dec.stars[a], dec.stars[b]).size() != 1)
                return false;
    return true;
}

} // namespace stardec
