#include <doctest.h>

#include <algorithm>
#include <random>

#include "stardec/border.hpp"
#include "stardec/explorer.hpp"
#include "support/oracles.hpp"

using namespace stardec;

namespace {

bool segment_exists(const CyclicPolygon& poly, VertexId a, VertexId b) {
    if (poly.succ(a) == b)
        return true;
    return splits_angle(poly.pred(a), a, poly.succ(a), b, poly.size()) &&
           splits_angle(poly.pred(b), b, poly.succ(b), a, poly.size());
}

// Test-side enumerator of every alternating star through v- -> v, validated
// only on completed cycles (no pruning); the library DFS must return the
// lexicographic minimum of this list.
void enumerate_alternating(const CyclicPolygon& poly, VertexId v0, std::vector<VertexId>& cycle,
                           std::vector<bool>& used, std::vector<Star>& out) {
    const int n = poly.size();
    VertexId w = cycle.back();
    if (segment_exists(poly, w, v0)) {
        Star star{n, cycle};
        if (is_star(star))
            out.push_back(star); // unrotated: keeps v- -> v traversal intact
    }
    for (VertexId x = 0; x < n; ++x) {
        if (used[static_cast<size_t>(x)] || x == v0 || !segment_exists(poly, w, x))
            continue;
        VertexId y = poly.succ(x);
        if (used[static_cast<size_t>(y)] || y == v0 || y == x)
            continue;
        cycle.push_back(x);
        cycle.push_back(y);
        used[static_cast<size_t>(x)] = used[static_cast<size_t>(y)] = true;
        enumerate_alternating(poly, v0, cycle, used, out);
        used[static_cast<size_t>(x)] = used[static_cast<size_t>(y)] = false;
        cycle.pop_back();
        cycle.pop_back();
    }
}

std::optional<Star> border_star_by_enumeration(const CyclicPolygon& poly, VertexId v) {
    std::vector<VertexId> cycle = {poly.pred(v), v, poly.succ(v)};
    std::vector<bool> used(static_cast<size_t>(poly.size()), false);
    for (VertexId w : cycle)
        used[static_cast<size_t>(w)] = true;
    std::vector<Star> all;
    enumerate_alternating(poly, poly.pred(v), cycle, used, all);
    if (all.empty())
        return std::nullopt;
    std::optional<Star> best;
    AngleSequenceKey best_key;
    for (const Star& s : all) {
        AngleSequenceKey key = angle_sequence_key(poly, s, v);
        if (!best || std::lexicographical_compare(key.begin(), key.end(), best_key.begin(), best_key.end())) {
            best = s.canonical();
            best_key = key;
        }
    }
    return best;
}

CyclicPolygon rotate_labels(const CyclicPolygon& poly, int shift) {
    const int n = poly.size();
    std::vector<VertexId> succ(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        succ[static_cast<size_t>((v + shift) % n)] = (poly.succ(v) + shift) % n;
    return CyclicPolygon::validate(n, succ);
}

} // namespace

TEST_CASE("angle units under the uniform placement") {
    // Quad ear angle at apex 2 between rays to 1 and 0: one position arc.
    CHECK(angle_units(1, 2, 0, 4) == 1);
    CHECK(angle_units(0, 2, 1, 4) == 1);
    CHECK(angle_units(1, 0, 3, 8) == 2);
    CHECK(angle_units(3, 0, 3, 8) == 0);
}

TEST_CASE("border star of convex polygons is the ear") {
    for (int n = 4; n <= 8; ++n) {
        CyclicPolygon poly = convex_polygon(n);
        for (VertexId v = 0; v < n; ++v) {
            auto bs = border_star(poly, v);
            REQUIRE(bs.has_value());
            Star ear{n, {poly.pred(v), v, poly.succ(v)}};
            CHECK(*bs == ear.canonical());
        }
    }
}

TEST_CASE("border star of P_5^2 is the whole polygon") {
    CyclicPolygon p52 = regular_star_polygon(5, 2);
    for (VertexId v = 0; v < 5; ++v) {
        auto bs = border_star(p52, v);
        REQUIRE(bs.has_value());
        Star whole{5, {0, 2, 4, 1, 3}};
        CHECK(*bs == whole.canonical());
    }
}

TEST_CASE("border star of P_7^2 at 0: three polygon edges, two diagonals") {
    CyclicPolygon p72 = regular_star_polygon(7, 2);
    auto bs = border_star(p72, 0);
    REQUIRE(bs.has_value());
    CHECK(bs->length() == 5);
    int polygon_edges = 0;
    for (const DirectedEdge& e : bs->edges())
        polygon_edges += p72.succ(e.tail) == e.head;
    CHECK(polygon_edges == 3);
    CHECK(bs == border_star_by_enumeration(p72, 0));
}

TEST_CASE("border star DFS equals exhaustive enumeration") {
    for (int n = 5; n <= 6; ++n)
        for (const CyclicPolygon& poly : oracle::all_valid_polygons(n))
            for (VertexId v = 0; v < n; ++v)
                CHECK(border_star(poly, v) == border_star_by_enumeration(poly, v));
    CyclicPolygon p72 = regular_star_polygon(7, 2);
    for (VertexId v = 0; v < 7; ++v)
        CHECK(border_star(p72, v) == border_star_by_enumeration(p72, v));
}

TEST_CASE("border star is equivariant under label rotation") {
    std::mt19937 rng(67);
    int checked = 0;
    while (checked < 50) {
        std::uniform_int_distribution<int> pick_n(4, 9);
        auto poly = oracle::random_polygon(rng, pick_n(rng));
        if (!poly)
            continue;
        ++checked;
        const int n = poly->size();
        std::uniform_int_distribution<int> pick_shift(1, n - 1);
        int shift = pick_shift(rng);
        CyclicPolygon rotated = rotate_labels(*poly, shift);
        for (VertexId v = 0; v < n; ++v) {
            auto a = border_star(*poly, v);
            auto b = border_star(rotated, (v + shift) % n);
            REQUIRE(a.has_value() == b.has_value());
            if (a) {
                Star relabeled{n, {}};
                for (VertexId w : a->vertices)
                    relabeled.vertices.push_back((w + shift) % n);
                CHECK(relabeled.canonical() == *b);
            }
        }
    }
}

TEST_CASE("remove_star") {
    // Quad ear (3,0,1) leaves the triangle on {1,2,3}.
    CyclicPolygon quad = convex_polygon(4);
    Star ear{4, {3, 0, 1}};
    auto rest = remove_star(quad, ear.canonical());
    REQUIRE(rest.has_value());
    CHECK(rest->polygon.size() == 3);
    CHECK(rest->to_parent == std::vector<VertexId>{1, 2, 3});

    // Removing the whole P_5^2 leaves nothing.
    CyclicPolygon p52 = regular_star_polygon(5, 2);
    Star whole{5, {0, 2, 4, 1, 3}};
    CHECK_FALSE(remove_star(p52, whole.canonical()).has_value());

    // Convex hexagon ear at 0 leaves a convex pentagon.
    CyclicPolygon hex = convex_polygon(6);
    Star hex_ear{6, {5, 0, 1}};
    auto penta = remove_star(hex, hex_ear.canonical());
    REQUIRE(penta.has_value());
    CHECK(penta->polygon == convex_polygon(5));
    CHECK(penta->to_parent == std::vector<VertexId>{1, 2, 3, 4, 5});

    // An all-diagonal triangle leaves vertex 0 with outdegree two.
    Star inner{6, {0, 2, 4}};
    CHECK_THROWS_WITH_AS(remove_star(hex, inner), doctest::Contains("ResidualNotCyclicPolygon"), Error);
}

TEST_CASE("peel_decomposition of convex polygons and P_7^2") {
    for (int n = 4; n <= 9; ++n) {
        auto dec = peel_decomposition(convex_polygon(n));
        REQUIRE(dec.has_value());
        CHECK(static_cast<int>(dec->stars.size()) == n - 2);
        for (const Star& s : dec->stars)
            CHECK(s.length() == 3);
        CHECK(static_cast<int>(dec->diagonals().size()) == n - 3);
    }
    auto p72 = peel_decomposition(regular_star_polygon(7, 2));
    REQUIRE(p72.has_value());
    CHECK(p72->stars.size() == 3);
    for (const Star& s : p72->stars)
        CHECK(s.length() == 5);
}

TEST_CASE("existence agrees with direct search on every valid polygon, n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (const CyclicPolygon& poly : oracle::all_valid_polygons(n))
            CHECK(admits_star_decomposition(poly) == direct_search_admits(poly));
}

TEST_CASE("a non-decomposable polygon with nonnegative diagonal budget exists at n = 7") {
    CyclicPolygon poly = CyclicPolygon::validate(7, {1, 2, 5, 4, 0, 6, 3});
    CHECK_FALSE(admits_star_decomposition(poly));
    CHECK_FALSE(direct_search_admits(poly));
    int s = 7 - 2 * poly.rotation_number();
    CHECK(static_cast<int>(linkable_pairs(poly).size()) - s * (s - 1) / 2 >= 0);
}

TEST_CASE("if the polygon admits a decomposition, every minimal-edge head has a border star") {
    for (int n = 4; n <= 6; ++n)
        for (const CyclicPolygon& poly : oracle::all_valid_polygons(n)) {
            if (!admits_star_decomposition(poly))
                continue;
            for (const DirectedEdge& uv : minimal_edges(poly))
                CHECK(border_star(poly, uv.head).has_value());
        }
}

TEST_CASE("find_constrained_linkable_pair on configurations from real decompositions") {
    int instances = 0;
    bool negative_checked = false;
    std::vector<StarDecomposition> decs;
    {
        FlipGraph g = enumerate_maximal(regular_star_polygon(7, 2));
        for (const auto& [key, dec] : g.nodes)
            decs.push_back(dec);
        decs.push_back(maximalize(star_decomposition(CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1}), {})));
    }
    for (const StarDecomposition& dec : decs) {
        const CyclicPolygon& poly = dec.polygon();
        const int n = poly.size();
        std::vector<DirectedEdge> minimals = minimal_edges(poly);
        for (size_t ia = 0; ia < dec.stars.size(); ++ia) {
            for (size_t ib = 0; ib < dec.stars.size(); ++ib) {
                if (ia == ib)
                    continue;
                const Star& sa = dec.stars[ia];
                const Star& sb = dec.stars[ib];
                for (const DirectedEdge& xy : sa.edges()) {
                    if (std::find(minimals.begin(), minimals.end(), xy) == minimals.end())
                        continue;
                    for (const DirectedEdge& a01 : sa.edges()) {
                        for (const DirectedEdge& b01 : sb.edges()) {
                            const VertexId seq[5] = {b01.tail, xy.head, b01.head, a01.tail, xy.tail};
                            bool distinct = true;
                            for (int i = 0; i < 5; ++i)
                                for (int j = i + 1; j < 5; ++j)
                                    distinct &= seq[i] != seq[j];
                            if (!distinct)
                                continue;
                            bool ordered = true;
                            int last = 0;
                            for (int i = 1; i < 5; ++i) {
                                int g = circular_gap(seq[0], seq[i], n);
                                ordered &= g > last;
                                last = g;
                            }
                            if (!ordered)
                                continue;
                            if (circular_gap(xy.tail, a01.head, n) > circular_gap(xy.tail, b01.tail, n))
                                continue;
                            StarPair found =
                                find_constrained_linkable_pair(poly, sa, sb, a01.tail, a01.head, b01.tail,
                                                               b01.head, xy.tail, xy.head);
                            ++instances;
                            CHECK(circular_gap(xy.tail, found.first, n) <=
                                  circular_gap(xy.tail, a01.head, n));
                            std::vector<StarPair> pairs = linkable_pairs_between(sa, sb);
                            CHECK(std::find(pairs.begin(), pairs.end(), found) != pairs.end());
                            if (!negative_checked) {
                                negative_checked = true;
                                CHECK_THROWS_WITH_AS(
                                    find_constrained_linkable_pair(poly, sa, sb, a01.tail, a01.head,
                                                                   b01.head, b01.tail, xy.tail, xy.head),
                                    doctest::Contains("HypothesisViolated"), Error);
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(instances > 0);
    CHECK(negative_checked);
}

TEST_CASE("normalize_to_border_star on the convex pentagon fan") {
    StarDecomposition fan = star_decomposition(convex_polygon(5), {{0, 2}, {2, 4}});

    // The fan already contains the ear at v=1.
    NormalizeResult at1 = normalize_to_border_star(fan, {0, 1});
    CHECK(at1.flips.empty());
    CHECK(at1.decomposition == fan);

    // The ear at v=4 takes at most two flips on the 5-node flip graph.
    NormalizeResult at4 = normalize_to_border_star(fan, {3, 4});
    CHECK(at4.flips.size() <= 2);
    Star ear{5, {3, 4, 0}};
    CHECK(std::find(at4.decomposition.stars.begin(), at4.decomposition.stars.end(), ear.canonical()) !=
          at4.decomposition.stars.end());

    // Replaying the recorded flips reproduces the result.
    StarDecomposition replay = fan;
    for (const auto& [removed, added] : at4.flips) {
        FlipResult step = diagonal_flip(replay, removed);
        CHECK(step.added == added);
        replay = std::move(step.decomposition);
    }
    CHECK(replay == at4.decomposition);

    CHECK_THROWS_AS(normalize_to_border_star(fan, {0, 2}), Error); // not even an edge
    StarDecomposition nonmax = star_decomposition(CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1}), {});
    CHECK_THROWS_WITH_AS(normalize_to_border_star(nonmax, {0, 2}), doctest::Contains("NotMaximal"), Error);
}

TEST_CASE("normalize_to_border_star across the P_7^2 flip graph, one edge") {
    FlipGraph g = enumerate_maximal(regular_star_polygon(7, 2));
    REQUIRE(g.node_count() == 14);
    auto target = border_star(regular_star_polygon(7, 2), 2);
    REQUIRE(target.has_value());
    for (const auto& [key, dec] : g.nodes) {
        NormalizeResult normalized = normalize_to_border_star(dec, {0, 2});
        CHECK(std::find(normalized.decomposition.stars.begin(), normalized.decomposition.stars.end(),
                        *target) != normalized.decomposition.stars.end());
    }
}

TEST_CASE("normalize then peel: the remaining stars decompose the residual") {
    // The reduction step behind flip connectivity: flip a maximal
    // decomposition until it contains the border star, remove that star,
    // and the leftover stars must form a star decomposition of the residual.
    for (const CyclicPolygon& poly :
         {regular_star_polygon(7, 2), convex_polygon(6), CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1})}) {
        DirectedEdge uv = minimal_edges(poly).front();
        auto target = border_star(poly, uv.head);
        REQUIRE(target.has_value());
        FlipGraph g = enumerate_maximal(poly);
        for (const auto& [key, dec] : g.nodes) {
            StarDecomposition normalized = normalize_to_border_star(dec, uv).decomposition;
            auto residual = remove_star(poly, *target);
            if (!residual) {
                CHECK(normalized.stars.size() == 1);
                continue;
            }
            std::vector<VertexId> compress(static_cast<size_t>(poly.size()), -1);
            for (size_t i = 0; i < residual->to_parent.size(); ++i)
                compress[static_cast<size_t>(residual->to_parent[i])] = static_cast<VertexId>(i);

            std::vector<Star> rest;
            std::vector<Diagonal> rest_diagonals;
            for (const Star& s : normalized.stars) {
                if (s == *target)
                    continue;
                Star mapped;
                mapped.n = residual->polygon.size();
                for (VertexId v : s.vertices) {
                    REQUIRE(compress[static_cast<size_t>(v)] != -1);
                    mapped.vertices.push_back(compress[static_cast<size_t>(v)]);
                }
                for (const DirectedEdge& e : mapped.edges())
                    if (residual->polygon.succ(e.tail) != e.head)
                        rest_diagonals.emplace_back(e.tail, e.head);
                rest.push_back(mapped.canonical());
            }
            REQUIRE(rest.size() + 1 == normalized.stars.size());
            std::sort(rest_diagonals.begin(), rest_diagonals.end());
            rest_diagonals.erase(std::unique(rest_diagonals.begin(), rest_diagonals.end()),
                                 rest_diagonals.end());
            StarDecomposition reduced = star_decomposition(residual->polygon, rest_diagonals);
            std::sort(rest.begin(), rest.end());
            CHECK(reduced.stars == rest);
        }
    }
}
