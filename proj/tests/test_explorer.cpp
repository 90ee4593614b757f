#include <doctest.h>

#include <algorithm>

#include "stardec/explorer.hpp"
#include "support/oracles.hpp"

using namespace stardec;

TEST_CASE("enumerate_maximal matches the counting formulas at desk scale") {
    CHECK(enumerate_maximal(CyclicPolygon::validate(3, {1, 2, 0})).node_count() == 1);
    CHECK(enumerate_maximal(CyclicPolygon::validate(3, {1, 2, 0})).edge_count() == 0);
    CHECK(enumerate_maximal(convex_polygon(4)).node_count() == 2);
    CHECK(enumerate_maximal(convex_polygon(5)).node_count() == 5);

    FlipGraph hex = enumerate_maximal(convex_polygon(6));
    CHECK(hex.node_count() == 14);
    CHECK(hex.edge_count() == 21); // 3-regular on 14 nodes

    FlipGraph p72 = enumerate_maximal(regular_star_polygon(7, 2));
    CHECK(p72.node_count() == 14);
    CHECK(p72.edge_count() == 28); // 4-regular

    CHECK(enumerate_maximal(regular_star_polygon(9, 3)).node_count() == 30);

    // A polygon with no decomposition yields the empty graph.
    FlipGraph empty = enumerate_maximal(CyclicPolygon::validate(7, {1, 2, 5, 4, 0, 6, 3}));
    CHECK(empty.node_count() == 0);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("parallel and serial enumeration agree") {
    std::vector<CyclicPolygon> cases = {convex_polygon(6), convex_polygon(7), regular_star_polygon(7, 2),
                                        CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1})};
    for (const CyclicPolygon& poly : cases) {
        FlipGraph serial = enumerate_maximal_serial(poly);
        FlipGraph parallel = enumerate_maximal(poly);
        CHECK(serial.nodes == parallel.nodes);
        CHECK(serial.edges == parallel.edges);
    }
}

TEST_CASE("flip enumeration is complete against direct subset search") {
    auto keys_of = [](const FlipGraph& g) {
        std::vector<CanonicalKey> keys;
        for (const auto& [key, dec] : g.nodes)
            keys.push_back(key);
        return keys;
    };
    for (int n = 4; n <= 6; ++n)
        for (const CyclicPolygon& poly : oracle::all_valid_polygons(n))
            CHECK(keys_of(enumerate_maximal(poly)) == direct_search_maximal(poly));
    CHECK(keys_of(enumerate_maximal(regular_star_polygon(7, 2))) ==
          direct_search_maximal(regular_star_polygon(7, 2)));
    CHECK(keys_of(enumerate_maximal(convex_polygon(7))) == direct_search_maximal(convex_polygon(7)));
}

TEST_CASE("every node is maximal, with the star and diagonal counts") {
    std::vector<CyclicPolygon> cases = {convex_polygon(6), regular_star_polygon(7, 2),
                                        regular_star_polygon(9, 3),
                                        CyclicPolygon::validate(10, {2, 3, 4, 5, 0, 1, 7, 8, 9, 6})};
    for (const CyclicPolygon& poly : cases) {
        const int s = poly.size() - 2 * poly.rotation_number();
        const int p = static_cast<int>(linkable_pairs(poly).size());
        FlipGraph g = enumerate_maximal(poly);
        CHECK_FALSE(g.nodes.empty());
        for (const auto& [key, dec] : g.nodes) {
            CHECK(static_cast<int>(dec.stars.size()) == s);
            CHECK(static_cast<int>(key.size()) == p - s * (s - 1) / 2);
            CHECK(is_maximal(dec));
        }
    }
}

TEST_CASE("flip_path") {
    FlipGraph quad = enumerate_maximal(convex_polygon(4));
    CanonicalKey a = {{0, 2}};
    CanonicalKey b = {{1, 3}};
    CHECK(flip_path(quad, a, a).empty());
    std::vector<FlipStep> one = flip_path(quad, a, b);
    REQUIRE(one.size() == 1);
    CHECK(one[0].removed == Diagonal{0, 2});
    CHECK(one[0].added == Diagonal{1, 3});
    CHECK_THROWS_WITH_AS(flip_path(quad, {{0, 1}}, b), doctest::Contains("KeyNotFound"), Error);

    // Replay-validate several paths across the P_7^2 graph.
    FlipGraph g = enumerate_maximal(regular_star_polygon(7, 2));
    std::vector<CanonicalKey> keys;
    for (const auto& [key, dec] : g.nodes)
        keys.push_back(key);
    for (size_t i = 0; i < keys.size(); i += 3) {
        for (size_t j = 0; j < keys.size(); j += 5) {
            std::vector<FlipStep> path = flip_path(g, keys[i], keys[j]);
            StarDecomposition cur = g.nodes.at(keys[i]);
            for (const FlipStep& step : path) {
                FlipResult res = diagonal_flip(cur, step.removed);
                CHECK(res.added == step.added);
                cur = std::move(res.decomposition);
                CHECK(canonical_key(cur) == step.to);
            }
            CHECK(canonical_key(cur) == keys[j]);
        }
    }
}

TEST_CASE("verify_suite passes on representative polygons") {
    for (const CyclicPolygon& poly :
         {convex_polygon(5), convex_polygon(6), regular_star_polygon(7, 2),
          CyclicPolygon::validate(6, {2, 3, 4, 5, 0, 1}), CyclicPolygon::validate(7, {1, 2, 5, 4, 0, 6, 3})}) {
        VerifyReport report = verify_suite(poly);
        for (const CheckResult& check : report.checks) {
            INFO(check.name, ": ", check.details);
            CHECK(check.pass);
        }
    }

    // Convex pentagon: C_3 = 5 nodes, all checks green.
    VerifyReport penta = verify_suite(convex_polygon(5));
    CHECK(penta.all_pass());
    bool saw_count = false;
    for (const CheckResult& check : penta.checks)
        if (check.name == "counting_oracle") {
            saw_count = true;
            CHECK(check.details == "node count matches det(C_{n-i-j}) = 5");
        }
    CHECK(saw_count);

    // P_9^2 skips the subset oracle (n > 8) but everything else passes.
    VerifyReport p92 = verify_suite(regular_star_polygon(9, 2), {.oracle_max_n = 8, .seed = 3});
    CHECK(p92.all_pass());
    for (const CheckResult& check : p92.checks)
        CHECK(check.name != "completeness_oracle");
}

TEST_CASE("verify_suite on random polygons up to n = 10") {
    std::mt19937 rng(83);
    int checked = 0;
    while (checked < 12) {
        std::uniform_int_distribution<int> pick_n(8, 10);
        auto poly = oracle::random_polygon(rng, pick_n(rng));
        if (!poly || linkable_pairs(*poly).size() > 22)
            continue;
        ++checked;
        VerifyReport report = verify_suite(*poly, {.oracle_max_n = 7, .seed = 11});
        for (const CheckResult& check : report.checks) {
            INFO(check.name, ": ", check.details);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("canonical keys and strings") {
    StarDecomposition dec = star_decomposition(convex_polygon(4), {{0, 2}});
    CHECK(canonical_key(dec) == CanonicalKey{{0, 2}});
    CHECK(key_to_string(canonical_key(dec)) == "{0-2}");
    CHECK(key_to_string({}) == "{}");
}
