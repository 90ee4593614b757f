#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "stardec/star.hpp"
#include "support/oracles.hpp"

using namespace stardec;

TEST_CASE("chords_cross") {
    CHECK(chords_cross(0, 2, 1, 3, 4));
    CHECK_FALSE(chords_cross(0, 1, 2, 3, 4));
    CHECK_FALSE(chords_cross(0, 2, 0, 3, 4)); // shared endpoint
    CHECK(chords_cross(1, 3, 0, 2, 4));       // symmetric
}

TEST_CASE("cycle canonicalization rotates to the smallest edge") {
    OrientedCycle c{5, {3, 1, 4}};
    CHECK(c.canonical().vertices == std::vector<VertexId>{1, 4, 3});
}

TEST_CASE("is_star recognizes k-stars and rejects non-stars") {
    CHECK(is_star({5, {0, 2, 4, 1, 3}}));  // the 2-star on five points
    CHECK_FALSE(is_star({5, {0, 1, 2, 3, 4}})); // edges 0-1 and 2-3 are disjoint
    CHECK(is_star({5, {0, 1, 2}}));        // a 1-star
    CHECK_FALSE(is_star({5, {0, 1, 2, 3}}));    // even length
    CHECK_FALSE(is_star({5, {0, 1, 0}}));       // repeated vertex
    CHECK_FALSE(is_star({5, {0, 2, 1}}));       // clockwise triple
}

TEST_CASE("pairwise-sharing test matches the jump characterization") {
    // On all odd subsets: the jump cycle is a star both ways.
    for (int n = 5; n <= 9; ++n)
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<VertexId> subset;
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b))
                    subset.push_back(b);
            if (subset.size() < 3 || subset.size() % 2 == 0)
                continue;
            Star star = oracle::star_on_subset(subset, n);
            CHECK(is_star(star));
            CHECK(is_star_by_jump(star));
        }

    // On random odd sequences the two tests agree.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 4000; ++trial) {
        std::uniform_int_distribution<int> pick_n(5, 10);
        int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_m(0, 1);
        int m = 2 * pick_m(rng) + 3;
        std::vector<VertexId> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        OrientedCycle cycle{n, std::vector<VertexId>(all.begin(), all.begin() + m)};
        CHECK(is_star(cycle) == is_star_by_jump(cycle));
    }
}

TEST_CASE("f_next on the subdivided quadrilateral") {
    SubdividedPolygon sp = SubdividedPolygon::make(convex_polygon(4), {{0, 2}});
    CHECK(f_next(sp, {1, 2}) == DirectedEdge{2, 0});
    CHECK(f_next(sp, {3, 0}) == DirectedEdge{0, 2});
    CHECK(f_next(sp, {0, 1}) == DirectedEdge{1, 2});
    CHECK_THROWS_AS(f_next(sp, {0, 3}), Error);
}

TEST_CASE("f_next agrees with the trigonometric sweep and is a bijection") {
    std::mt19937 rng(29);
    int checked = 0;
    while (checked < 150) {
        std::uniform_int_distribution<int> pick_n(4, 8);
        auto poly = oracle::random_polygon(rng, pick_n(rng));
        if (!poly)
            continue;
        std::vector<Diagonal> pairs = linkable_pairs(*poly);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        std::uniform_int_distribution<size_t> pick_k(0, pairs.size());
        pairs.resize(pick_k(rng));
        SubdividedPolygon sp = SubdividedPolygon::make(*poly, pairs);
        ++checked;

        std::vector<DirectedEdge> all;
        for (VertexId v = 0; v < sp.size(); ++v)
            all.push_back({v, sp.polygon().succ(v)});
        for (const Diagonal& d : sp.diagonals()) {
            all.push_back({d.u, d.v});
            all.push_back({d.v, d.u});
        }
        std::set<DirectedEdge> images;
        for (const DirectedEdge& e : all) {
            DirectedEdge next = f_next(sp, e);
            CHECK(next == oracle::f_next_float(sp, e));
            images.insert(next);
        }
        CHECK(images.size() == all.size()); // bijection

        // Orbits cover each directed edge exactly once.
        size_t covered = 0;
        for (const OrientedCycle& c : cycle_decomposition(sp))
            covered += static_cast<size_t>(c.length());
        CHECK(covered == all.size());
    }
}

TEST_CASE("cycle decomposition of the quad and of diagonal-free polygons") {
    SubdividedPolygon sp = SubdividedPolygon::make(convex_polygon(4), {{0, 2}});
    std::vector<OrientedCycle> cycles = cycle_decomposition(sp);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(cycles[1].vertices == std::vector<VertexId>{0, 2, 3});

    // With no diagonals the decomposition is the edge cycles themselves.
    CyclicPolygon two = CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1});
    std::vector<OrientedCycle> plain = cycle_decomposition(SubdividedPolygon::make(two, {}));
    REQUIRE(plain.size() == 2);
    CHECK(plain[0].vertices == std::vector<VertexId>{0, 2, 4});
    CHECK(plain[1].vertices == std::vector<VertexId>{1, 3, 5});
}

TEST_CASE("independence of angles") {
    Star t1{4, {0, 1, 2}};
    Star t2{4, {0, 2, 3}};
    CHECK(independence_check({t1, t2}));
    CHECK_FALSE(independence_check({t1, t1}));
    CHECK(independence_check({Star{8, {0, 1, 2}}, Star{8, {4, 5, 6}}}));
}

TEST_CASE("star_decomposition on the quadrilateral") {
    StarDecomposition dec = star_decomposition(convex_polygon(4), {{0, 2}});
    REQUIRE(dec.stars.size() == 2);
    CHECK(dec.stars[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(dec.stars[1].vertices == std::vector<VertexId>{0, 2, 3});

    CHECK_THROWS_AS(star_decomposition(convex_polygon(4), {}), NotAStarDecompositionError);
    try {
        star_decomposition(convex_polygon(4), {});
    } catch (const NotAStarDecompositionError& e) {
        REQUIRE(e.offending_cycles().size() == 1);
        CHECK(e.offending_cycles()[0].length() == 4);
    }
    CHECK_THROWS_WITH_AS(star_decomposition(convex_polygon(4), {{0, 1}}),
                         doctest::Contains("DiagonalNotLinkable"), Error);
}

TEST_CASE("P_7^2 with a 2-saturated diagonal set gives three 2-stars") {
    CyclicPolygon p72 = regular_star_polygon(7, 2);
    std::vector<Diagonal> pairs = linkable_pairs(p72);
    REQUIRE(pairs.size() == 7);

    // Search all 4-subsets; maximal sets have exactly
    // 7 - C(3,2) = 4 diagonals, and the count must match det(C_{7-i-j}) = 14.
    int found = 0;
    for (int mask = 0; mask < (1 << 7); ++mask) {
        if (__builtin_popcount(mask) != 4)
            continue;
        std::vector<Diagonal> subset;
        for (int b = 0; b < 7; ++b)
            if (mask & (1 << b))
                subset.push_back(pairs[static_cast<size_t>(b)]);
        auto dec = try_star_decomposition(p72, subset);
        if (!dec)
            continue;
        ++found;
        CHECK(dec->stars.size() == 3);
        for (const Star& s : dec->stars)
            CHECK(s.length() == 5);
    }
    CHECK(found == 14);
}

TEST_CASE("decompositions arising from cycle decompositions are independent") {
    std::mt19937 rng(31);
    int checked = 0;
    while (checked < 60) {
        std::uniform_int_distribution<int> pick_n(4, 8);
        auto poly = oracle::random_polygon(rng, pick_n(rng));
        if (!poly)
            continue;
        std::vector<Diagonal> pairs = linkable_pairs(*poly);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        std::uniform_int_distribution<size_t> pick_k(0, pairs.size());
        pairs.resize(pick_k(rng));
        auto dec = try_star_decomposition(*poly, pairs);
        if (!dec)
            continue;
        ++checked;
        CHECK(independence_check(dec->stars));
        CHECK(static_cast<int>(dec->stars.size()) == poly->size() - 2 * poly->rotation_number());
        for (const Star& s : dec->stars)
            CHECK(is_star_by_jump(s)); // the two characterizations agree on real stars
    }
}

TEST_CASE("is_maximal fast path against the literal definition") {
    StarDecomposition quad = star_decomposition(convex_polygon(4), {{0, 2}});
    CHECK(is_maximal(quad));
    CHECK(oracle::literally_maximal(quad));

    // A single-star decomposition has no pairs and is trivially maximal.
    StarDecomposition p52 = star_decomposition(regular_star_polygon(5, 2), {});
    CHECK(p52.stars.size() == 1);
    CHECK(is_maximal(p52));
    CHECK(oracle::literally_maximal(p52));

    // Any sub-maximal decomposition of P_7^2 must fail both tests; maximal
    // ones have exactly 4 diagonals.
    CyclicPolygon p72 = regular_star_polygon(7, 2);
    std::vector<Diagonal> pairs = linkable_pairs(p72);
    for (int mask = 0; mask < (1 << 7); ++mask) {
        if (__builtin_popcount(mask) >= 4)
            continue;
        std::vector<Diagonal> subset;
        for (int b = 0; b < 7; ++b)
            if (mask & (1 << b))
                subset.push_back(pairs[static_cast<size_t>(b)]);
        auto dec = try_star_decomposition(p72, subset);
        if (!dec)
            continue;
        CHECK_FALSE(is_maximal(*dec));
        CHECK_FALSE(oracle::literally_maximal(*dec));
    }

    // The interleaved-triangle hexagon decomposition is valid but not maximal.
    StarDecomposition two = star_decomposition(CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1}), {});
    CHECK_FALSE(is_maximal(two));
    CHECK_FALSE(oracle::literally_maximal(two));

    // Fast path agrees with the literal definition on random decompositions.
    std::mt19937 rng(37);
    int checked = 0;
    while (checked < 40) {
        std::uniform_int_distribution<int> pick_n(4, 7);
        auto poly = oracle::random_polygon(rng, pick_n(rng));
        if (!poly)
            continue;
        std::vector<Diagonal> cand = linkable_pairs(*poly);
        std::shuffle(cand.begin(), cand.end(), rng);
        std::uniform_int_distribution<size_t> pick_k(0, cand.size());
        cand.resize(pick_k(rng));
        auto dec = try_star_decomposition(*poly, cand);
        if (!dec)
            continue;
        ++checked;
        CHECK(is_maximal(*dec) == oracle::literally_maximal(*dec));
    }
}
