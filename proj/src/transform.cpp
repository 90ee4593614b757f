#include "stardec/transform.hpp"

#include <algorithm>
#include <string>

namespace stardec {

namespace {

VertexId star_succ(const Star& s, VertexId v) {
    int i = cycle_index_of(s, v);
    if (i < 0)
        throw Error(ErrorKind::Internal, "vertex not in star");
    return s.at(i + 1);
}

VertexId star_pred(const Star& s, VertexId v) {
    int i = cycle_index_of(s, v);
    if (i < 0)
        throw Error(ErrorKind::Internal, "vertex not in star");
    return s.at(i - 1);
}

void require_same_circle(const Star& s1, const Star& s2) {
    if (s1.n != s2.n)
        throw Error(ErrorKind::InvalidParameters, "stars live on circles of different sizes");
}

std::vector<StarPair> linkable_pairs_disjoint(const Star& s1, const Star& s2) {
    const int n = s1.n;
    std::vector<StarPair> pairs;
    for (int i = 0; i < s1.length(); ++i) {
        VertexId a = s1.at(i);
        for (int j = 0; j < s2.length(); ++j) {
            VertexId b = s2.at(j);
            if (splits_angle(s1.at(i - 1), a, s1.at(i + 1), b, n) &&
                splits_angle(s2.at(j - 1), b, s2.at(j + 1), a, n))
                pairs.emplace_back(a, b);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace

SplitStars split_shared_vertices(const Star& s1, const Star& s2) {
    require_same_circle(s1, s2);
    if (!independence_check({s1, s2}))
        throw Error(ErrorKind::NotIndependent, "stars have overlapping angles");
    const int n = s1.n;

    std::vector<int> membership(static_cast<size_t>(n), 0); // bit 1: s1, bit 2: s2
    for (VertexId v : s1.vertices)
        membership[static_cast<size_t>(v)] |= 1;
    for (VertexId v : s2.vertices)
        membership[static_cast<size_t>(v)] |= 2;

    bool any_shared = false;
    for (int m : membership)
        any_shared |= (m == 3);
    if (!any_shared) {
        std::vector<VertexId> identity(static_cast<size_t>(n));
        for (VertexId v = 0; v < n; ++v)
            identity[static_cast<size_t>(v)] = v;
        return SplitStars{s1, s2, n, std::move(identity)};
    }

    // Each shared vertex v becomes two adjacent slots. The star whose
    // incoming neighbor u satisfies v in ((u, u')) takes the earlier slot,
    // matching the anticlockwise insertion u1, v1, v, v2, u2.
    std::vector<VertexId> label1(static_cast<size_t>(n), -1);
    std::vector<VertexId> label2(static_cast<size_t>(n), -1);
    std::vector<VertexId> to_original;
    for (VertexId v = 0; v < n; ++v) {
        int m = membership[static_cast<size_t>(v)];
        VertexId slot = static_cast<VertexId>(to_original.size());
        if (m == 3) {
            VertexId in1 = star_pred(s1, v);
            VertexId in2 = star_pred(s2, v);
            bool first_leads = strict_between(in1, v, in2, n);
            label1[static_cast<size_t>(v)] = first_leads ? slot : slot + 1;
            label2[static_cast<size_t>(v)] = first_leads ? slot + 1 : slot;
            to_original.push_back(v);
            to_original.push_back(v);
        } else {
            if (m & 1)
                label1[static_cast<size_t>(v)] = slot;
            if (m & 2)
                label2[static_cast<size_t>(v)] = slot;
            to_original.push_back(v);
        }
    }

    const int total = static_cast<int>(to_original.size());
    auto relabel = [&](const Star& s, const std::vector<VertexId>& label) {
        Star out;
        out.n = total;
        out.vertices.reserve(s.vertices.size());
        for (VertexId v : s.vertices)
            out.vertices.push_back(label[static_cast<size_t>(v)]);
        return out.canonical();
    };
    SplitStars result{relabel(s1, label1), relabel(s2, label2), total, std::move(to_original)};
    if (!is_star(result.first) || !is_star(result.second))
        throw Error(ErrorKind::Internal, "vertex splitting broke a star");
    return result;
}

std::vector<StarPair> linkable_pairs_between(const Star& s1, const Star& s2) {
    require_same_circle(s1, s2);
    if (!independence_check({s1, s2}))
        throw Error(ErrorKind::NotIndependent, "stars have overlapping angles");

    bool disjoint = true;
    for (VertexId v : s1.vertices)
        if (cycle_index_of(s2, v) >= 0)
            disjoint = false;
    if (disjoint)
        return linkable_pairs_disjoint(s1, s2);

    SplitStars split = split_shared_vertices(s1, s2);
    std::vector<StarPair> pairs;
    for (const StarPair& p : linkable_pairs_disjoint(split.first, split.second)) {
        VertexId a = split.to_original[static_cast<size_t>(p.first)];
        VertexId b = split.to_original[static_cast<size_t>(p.second)];
        if (a == b)
            throw Error(ErrorKind::Internal, "linkable pair collapsed onto one vertex");
        pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<StarPair> WeightProfile::zero_pairs() const {
    std::vector<StarPair> pairs;
    const int total = 2 * half;
    for (int i = 0; i < total; ++i) {
        if (cls[static_cast<size_t>(i)] == 1 && w[static_cast<size_t>(i)] == 0)
            pairs.emplace_back(points[static_cast<size_t>(i)], points[static_cast<size_t>((i + half) % total)]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

WeightProfile weight_profile(const Star& s1, const Star& s2) {
    require_same_circle(s1, s2);
    for (VertexId v : s1.vertices)
        if (cycle_index_of(s2, v) >= 0)
            throw Error(ErrorKind::InvalidParameters,
                        "weight profile needs disjoint vertex sets; split shared vertices first");

    WeightProfile profile;
    for (VertexId v : s1.vertices)
        profile.points.push_back(v);
    for (VertexId v : s2.vertices)
        profile.points.push_back(v);
    std::sort(profile.points.begin(), profile.points.end());

    const int total = static_cast<int>(profile.points.size());
    if (total % 2 != 0)
        throw Error(ErrorKind::OddTotal, "merged vertex count " + std::to_string(total) + " is odd");
    profile.half = total / 2;

    profile.is_first.resize(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i)
        profile.is_first[static_cast<size_t>(i)] =
            cycle_index_of(s1, profile.points[static_cast<size_t>(i)]) >= 0;

    const int s = profile.half;
    profile.w.resize(static_cast<size_t>(total));
    profile.cls.resize(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) {
        int forward = 0, backward = 0;
        for (int d = 1; d <= s - 1; ++d)
            forward += profile.is_first[static_cast<size_t>((i + d) % total)] ? 1 : 0;
        for (int d = s + 1; d <= 2 * s - 1; ++d)
            backward += profile.is_first[static_cast<size_t>((i + d) % total)] ? 1 : 0;
        profile.w[static_cast<size_t>(i)] = forward - backward;
        bool here = profile.is_first[static_cast<size_t>(i)];
        bool anti = profile.is_first[static_cast<size_t>((i + s) % total)];
        profile.cls[static_cast<size_t>(i)] = (here == anti) ? 0 : (here ? 1 : 2);
    }
    return profile;
}

namespace {

// Appends v and then follows the star's successors up to and including stop.
void walk_inclusive(const Star& s, VertexId from, VertexId stop, std::vector<VertexId>& out) {
    out.push_back(from);
    VertexId cur = from;
    int guard = 0;
    while (cur != stop) {
        cur = star_succ(s, cur);
        out.push_back(cur);
        if (++guard > s.length())
            throw Error(ErrorKind::Internal, "walk did not terminate");
    }
}

// Appends the successors of after (exclusive) up to stop_before (exclusive).
void walk_between(const Star& s, VertexId after, VertexId stop_before, std::vector<VertexId>& out) {
    VertexId cur = star_succ(s, after);
    int guard = 0;
    while (cur != stop_before) {
        out.push_back(cur);
        cur = star_succ(s, cur);
        if (++guard > s.length())
            throw Error(ErrorKind::Internal, "walk did not terminate");
    }
}

} // namespace

std::pair<Star, Star> star_subdivision(const Star& s1, const Star& s2, StarPair p1, StarPair p2) {
    if (p1 == p2)
        throw Error(ErrorKind::PairsEqual, "the two linkable pairs must be distinct");
    std::vector<StarPair> pairs = linkable_pairs_between(s1, s2);
    auto known = [&](const StarPair& p) { return std::find(pairs.begin(), pairs.end(), p) != pairs.end(); };
    if (!known(p1) || !known(p2))
        throw Error(ErrorKind::NotLinkablePair, "a given pair is not a linkable pair of the two stars");

    const auto [u1, u2] = p1;
    const auto [v1, v2] = p2;

    // S1' = u1 u2 ...P2... v2 v1 ...Q1... u1-, S2' mirrored.
    Star a;
    a.n = s1.n;
    a.vertices.push_back(u1);
    walk_inclusive(s2, u2, v2, a.vertices);
    walk_inclusive(s1, v1, star_pred(s1, u1), a.vertices);

    Star b;
    b.n = s1.n;
    b.vertices.push_back(u2);
    walk_inclusive(s1, u1, v1, b.vertices);
    walk_inclusive(s2, v2, star_pred(s2, u2), b.vertices);

    if (!is_star(a) || !is_star(b))
        throw Error(ErrorKind::Internal, "star subdivision produced a non-star cycle");
    return {a.canonical(), b.canonical()};
}

namespace {

struct DoubleStarAt {
    size_t forward = 0;  // star containing e.u -> e.v
    size_t backward = 0; // star containing e.v -> e.u
};

DoubleStarAt find_double_star(const StarDecomposition& dec, Diagonal e) {
    const auto& ds = dec.diagonals();
    if (std::find(ds.begin(), ds.end(), e) == ds.end())
        throw Error(ErrorKind::DiagonalNotInD,
                    "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not a diagonal of the decomposition");
    DoubleStarAt at;
    bool fwd = false, bwd = false;
    for (size_t s = 0; s < dec.stars.size(); ++s) {
        const Star& star = dec.stars[s];
        int i = cycle_index_of(star, e.u);
        if (i >= 0 && star.at(i + 1) == e.v) {
            at.forward = s;
            fwd = true;
        }
        int j = cycle_index_of(star, e.v);
        if (j >= 0 && star.at(j + 1) == e.u) {
            at.backward = s;
            bwd = true;
        }
    }
    if (!fwd || !bwd || at.forward == at.backward)
        throw Error(ErrorKind::Internal, "diagonal orientations are not split across two stars");
    return at;
}

FlipResult rebuild_flip(const StarDecomposition& dec, Diagonal e, const DoubleStarAt& at, StarPair f) {
    const Star& sa = dec.stars[at.forward];  // contains u1 -> u2
    const Star& sb = dec.stars[at.backward]; // contains u2 -> u1
    const VertexId u1 = e.u, u2 = e.v;
    const auto [v1, v2] = f; // v1 in sa, v2 in sb

    // S1' = v1 v2 ...Q2... u2- u2 u2+ ...P1... v1-, S2' mirrored.
    Star a;
    a.n = sa.n;
    a.vertices.push_back(v1);
    walk_inclusive(sb, v2, u2, a.vertices);
    walk_between(sa, u2, v1, a.vertices);

    Star b;
    b.n = sa.n;
    b.vertices.push_back(v2);
    walk_inclusive(sa, v1, u1, b.vertices);
    walk_between(sb, u1, v2, b.vertices);

    if (!is_star(a) || !is_star(b))
        throw Error(ErrorKind::Internal, "diagonal flip produced a non-star cycle");

    Diagonal added(v1, v2);
    std::vector<Diagonal> diagonals;
    for (const Diagonal& d : dec.diagonals())
        if (!(d == e))
            diagonals.push_back(d);
    if (std::find(diagonals.begin(), diagonals.end(), added) != diagonals.end())
        throw Error(ErrorKind::Internal, "flip target already present in the diagonal set");
    diagonals.push_back(added);

    StarDecomposition rebuilt = star_decomposition(dec.polygon(), diagonals);

    // The constructive rebuild must agree with the recomputed decomposition.
    std::vector<Star> expected;
    for (size_t s = 0; s < dec.stars.size(); ++s)
        if (s != at.forward && s != at.backward)
            expected.push_back(dec.stars[s]);
    expected.push_back(a.canonical());
    expected.push_back(b.canonical());
    std::sort(expected.begin(), expected.end());
    if (expected != rebuilt.stars)
        throw Error(ErrorKind::Internal, "constructive flip disagrees with the cycle decomposition");

    return FlipResult{std::move(rebuilt), added};
}

} // namespace

FlipResult diagonal_flip(const StarDecomposition& dec, Diagonal e) {
    DoubleStarAt at = find_double_star(dec, e);
    std::vector<StarPair> pairs = linkable_pairs_between(dec.stars[at.forward], dec.stars[at.backward]);
    if (pairs.size() != 1)
        throw Error(ErrorKind::NotMaximal,
                    "double star sharing the diagonal has " + std::to_string(pairs.size()) +
                        " linkable pairs; expected exactly 1");
    return rebuild_flip(dec, e, at, pairs.front());
}

FlipResult diagonal_flip_to(const StarDecomposition& dec, Diagonal e, Diagonal f) {
    DoubleStarAt at = find_double_star(dec, e);
    std::vector<StarPair> pairs = linkable_pairs_between(dec.stars[at.forward], dec.stars[at.backward]);
    for (const StarPair& p : pairs) {
        if (Diagonal(p.first, p.second) == f)
            return rebuild_flip(dec, e, at, p);
    }
    throw Error(ErrorKind::NotLinkablePair,
                "{" + std::to_string(f.u) + "," + std::to_string(f.v) +
                    "} is not a linkable pair of the double star");
}

StarDecomposition maximalize(const StarDecomposition& dec) {
    StarDecomposition current = dec;
    for (;;) {
        bool subdivided = false;
        for (size_t a = 0; a < current.stars.size() && !subdivided; ++a) {
            for (size_t b = a + 1; b < current.stars.size() && !subdivided; ++b) {
                std::vector<StarPair> pairs = linkable_pairs_between(current.stars[a], current.stars[b]);
                if (pairs.size() < 3)
                    continue;
                auto [na, nb] = star_subdivision(current.stars[a], current.stars[b], pairs[0], pairs[1]);
                std::vector<Diagonal> diagonals = current.diagonals();
                diagonals.emplace_back(pairs[0].first, pairs[0].second);
                diagonals.emplace_back(pairs[1].first, pairs[1].second);
                StarDecomposition next = star_decomposition(current.polygon(), diagonals);
                if (std::find(next.stars.begin(), next.stars.end(), na.canonical()) == next.stars.end() ||
                    std::find(next.stars.begin(), next.stars.end(), nb.canonical()) == next.stars.end())
                    throw Error(ErrorKind::Internal, "subdivision disagrees with the cycle decomposition");
                current = std::move(next);
                subdivided = true;
            }
        }
        if (!subdivided)
            return current;
    }
}

} // namespace stardec
