#include "stardec/explorer.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stardec {

CanonicalKey canonical_key(const StarDecomposition& dec) {
    return dec.diagonals();
}

std::string key_to_string(const CanonicalKey& key) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i)
            out << " ";
        out << key[i].u << "-" << key[i].v;
    }
    out << "}";
    return out.str();
}

namespace {

std::optional<StarDecomposition> maximal_seed(const CyclicPolygon& poly) {
    std::optional<StarDecomposition> peeled = peel_decomposition(poly);
    if (!peeled)
        return std::nullopt;
    return maximalize(*peeled);
}

FlipEdge make_edge(const CanonicalKey& from, const CanonicalKey& to, Diagonal removed, Diagonal added) {
    if (from < to)
        return FlipEdge{from, to, removed, added};
    return FlipEdge{to, from, added, removed};
}

} // namespace

FlipGraph enumerate_maximal_serial(const CyclicPolygon& poly) {
    FlipGraph graph;
    std::optional<StarDecomposition> seed = maximal_seed(poly);
    if (!seed)
        return graph;

    std::set<FlipEdge> edges;
    std::deque<CanonicalKey> queue;
    CanonicalKey start = canonical_key(*seed);
    graph.nodes.emplace(start, std::move(*seed));
    queue.push_back(start);
    while (!queue.empty()) {
        CanonicalKey key = queue.front();
        queue.pop_front();
        const StarDecomposition& dec = graph.nodes.at(key);
        std::vector<Diagonal> diagonals = dec.diagonals();
        for (const Diagonal& e : diagonals) {
            FlipResult flipped = diagonal_flip(graph.nodes.at(key), e);
            CanonicalKey next = canonical_key(flipped.decomposition);
            edges.insert(make_edge(key, next, e, flipped.added));
            if (!graph.nodes.count(next)) {
                graph.nodes.emplace(next, std::move(flipped.decomposition));
                queue.push_back(next);
            }
        }
    }
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

FlipGraph enumerate_maximal(const CyclicPolygon& poly) {
#ifndef _OPENMP
    return enumerate_maximal_serial(poly);
#else
    FlipGraph graph;
    std::optional<StarDecomposition> seed = maximal_seed(poly);
    if (!seed)
        return graph;

    std::set<FlipEdge> edges;
    std::vector<CanonicalKey> frontier;
    CanonicalKey start = canonical_key(*seed);
    graph.nodes.emplace(start, std::move(*seed));
    frontier.push_back(start);

    while (!frontier.empty()) {
        // Expand the whole frontier in parallel; merging stays serial so the
        // node map never mutates while threads read it.
        std::vector<std::vector<std::pair<Diagonal, FlipResult>>> expansions(frontier.size());
        std::string failure;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(frontier.size()); ++i) {
            try {
                const StarDecomposition& dec = graph.nodes.at(frontier[static_cast<size_t>(i)]);
                auto& out = expansions[static_cast<size_t>(i)];
                out.reserve(dec.diagonals().size());
                for (const Diagonal& e : dec.diagonals())
                    out.emplace_back(e, diagonal_flip(dec, e));
            } catch (const std::exception& ex) {
#pragma omp critical
                failure = ex.what();
            }
        }
        if (!failure.empty())
            throw Error(ErrorKind::Internal, "flip failed during frontier expansion: " + failure);

        std::vector<CanonicalKey> next_frontier;
        for (size_t i = 0; i < frontier.size(); ++i) {
            for (auto& [removed, flipped] : expansions[i]) {
                CanonicalKey next = canonical_key(flipped.decomposition);
                edges.insert(make_edge(frontier[i], next, removed, flipped.added));
                if (!graph.nodes.count(next)) {
                    graph.nodes.emplace(next, std::move(flipped.decomposition));
                    next_frontier.push_back(next);
                }
            }
        }
        frontier = std::move(next_frontier);
    }
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
#endif
}

std::vector<FlipStep> flip_path(const FlipGraph& graph, const CanonicalKey& k1, const CanonicalKey& k2) {
    if (!graph.nodes.count(k1))
        throw Error(ErrorKind::KeyNotFound, "start key " + key_to_string(k1) + " is not a node");
    if (!graph.nodes.count(k2))
        throw Error(ErrorKind::KeyNotFound, "target key " + key_to_string(k2) + " is not a node");
    if (k1 == k2)
        return {};

    std::map<CanonicalKey, std::vector<FlipStep>> adjacency;
    for (const FlipEdge& e : graph.edges) {
        adjacency[e.a].push_back(FlipStep{e.a, e.b, e.removed, e.added});
        adjacency[e.b].push_back(FlipStep{e.b, e.a, e.added, e.removed});
    }

    std::map<CanonicalKey, FlipStep> parent;
    std::deque<CanonicalKey> queue;
    std::set<CanonicalKey> seen{k1};
    queue.push_back(k1);
    while (!queue.empty()) {
        CanonicalKey key = queue.front();
        queue.pop_front();
        for (const FlipStep& step : adjacency[key]) {
            if (seen.count(step.to))
                continue;
            seen.insert(step.to);
            parent.emplace(step.to, step);
            if (step.to == k2) {
                std::vector<FlipStep> path;
                for (CanonicalKey at = k2; at != k1; at = parent.at(at).from)
                    path.push_back(parent.at(at));
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(step.to);
        }
    }
    throw Error(ErrorKind::Internal, "flip graph is not connected");
}

namespace {

bool all_cycles_are_stars(const SubdividedPolygon& sp) {
    for (const OrientedCycle& c : cycle_decomposition(sp))
        if (!is_star(c))
            return false;
    return true;
}

} // namespace

std::vector<CanonicalKey> direct_search_maximal(const CyclicPolygon& poly) {
    std::vector<Diagonal> pairs = linkable_pairs(poly);
    const int p = static_cast<int>(pairs.size());
    if (p > 24)
        throw Error(ErrorKind::InvalidParameters,
                    "direct search over 2^" + std::to_string(p) + " subsets is out of desk scale");
    std::vector<std::uint32_t> valid;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        std::vector<Diagonal> subset;
        for (int b = 0; b < p; ++b)
            if (mask & (1u << b))
                subset.push_back(pairs[static_cast<size_t>(b)]);
        if (all_cycles_are_stars(SubdividedPolygon::make(poly, std::move(subset))))
            valid.push_back(mask);
    }
    std::vector<CanonicalKey> result;
    for (std::uint32_t mask : valid) {
        bool maximal = true;
        for (std::uint32_t other : valid)
            if (other != mask && (other & mask) == mask)
                maximal = false;
        if (!maximal)
            continue;
        CanonicalKey key;
        for (int b = 0; b < p; ++b)
            if (mask & (1u << b))
                key.push_back(pairs[static_cast<size_t>(b)]);
        result.push_back(std::move(key));
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool direct_search_admits(const CyclicPolygon& poly) {
    std::vector<Diagonal> pairs = linkable_pairs(poly);
    const int p = static_cast<int>(pairs.size());
    if (p > 24)
        throw Error(ErrorKind::InvalidParameters,
                    "direct search over 2^" + std::to_string(p) + " subsets is out of desk scale");
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        std::vector<Diagonal> subset;
        for (int b = 0; b < p; ++b)
            if (mask & (1u << b))
                subset.push_back(pairs[static_cast<size_t>(b)]);
        if (all_cycles_are_stars(SubdividedPolygon::make(poly, std::move(subset))))
            return true;
    }
    return false;
}

namespace {

std::string plural(size_t count, const char* noun) {
    return std::to_string(count) + " " + noun + (count == 1 ? "" : "s");
}

} // namespace

VerifyReport verify_suite(const CyclicPolygon& poly, const VerifyOptions& options) {
    VerifyReport report;
    const int n = poly.size();
    const int r = poly.rotation_number();
    const int stars_expected = n - 2 * r;
    const int p = static_cast<int>(linkable_pairs(poly).size());
    const long long diagonals_expected =
        static_cast<long long>(p) - static_cast<long long>(stars_expected) * (stars_expected - 1) / 2;

    FlipGraph graph = enumerate_maximal(poly);
    {
        std::ostringstream details;
        details << plural(graph.node_count(), "node") << ", " << plural(graph.edge_count(), "flip edge")
                << "; n=" << n << " r=" << r << " p=" << p;
        report.checks.push_back({"enumerate", true, details.str()});
    }
    if (graph.nodes.empty()) {
        report.checks.push_back({"existence", true, "no star decomposition; peeling agrees with the empty flip graph"});
    } else {
        bool star_count = true, diagonal_count = true;
        for (const auto& [key, dec] : graph.nodes) {
            star_count &= static_cast<int>(dec.stars.size()) == stars_expected;
            diagonal_count &= static_cast<long long>(key.size()) == diagonals_expected;
        }
        report.checks.push_back({"star_count", star_count,
                                 "every node has n-2r = " + std::to_string(stars_expected) + " stars"});
        report.checks.push_back({"diagonal_count", diagonal_count,
                                 "every node has p - C(n-2r,2) = " + std::to_string(diagonals_expected) +
                                     " diagonals"});

        std::map<CanonicalKey, size_t> degree;
        for (const FlipEdge& e : graph.edges) {
            ++degree[e.a];
            ++degree[e.b];
        }
        bool regular = true;
        for (const auto& [key, dec] : graph.nodes)
            regular &= degree[key] == key.size();
        report.checks.push_back({"degree_regularity", regular, "every node has one flip per diagonal"});
    }

    if (n <= options.oracle_max_n) {
        std::vector<CanonicalKey> oracle = direct_search_maximal(poly);
        std::vector<CanonicalKey> found;
        for (const auto& [key, dec] : graph.nodes)
            found.push_back(key);
        bool complete = oracle == found;
        report.checks.push_back({"completeness_oracle", complete,
                                 "flip reachability finds all " + plural(oracle.size(), "maximal decomposition") +
                                     " from direct subset search"});
        bool existence = admits_star_decomposition(poly) == !oracle.empty();
        report.checks.push_back({"existence_oracle", existence, "border-star peeling agrees with direct search"});
    }

    // Uniform edge lengths make the polygon a P_n^k; check the k-star facts.
    bool uniform = true;
    const int k = poly.edge_length(0);
    for (VertexId v = 1; v < n; ++v)
        uniform &= poly.edge_length(v) == k;
    if (uniform && !graph.nodes.empty()) {
        bool all_k = true;
        for (const auto& [key, dec] : graph.nodes) {
            for (const Star& s : dec.stars)
                all_k &= s.length() == 2 * k + 1;
            all_k &= static_cast<int>(key.size()) == k * (n - 2 * k - 1);
        }
        report.checks.push_back({"k_star_nodes", all_k,
                                 "every node is a " + std::to_string(k) + "-star decomposition with k(n-2k-1) = " +
                                     std::to_string(k * (n - 2 * k - 1)) + " diagonals"});
        BigInt expected = jonsson_count(n, k);
        bool count_ok = BigInt(static_cast<long long>(graph.node_count())) == expected;
        report.checks.push_back({"counting_oracle", count_ok,
                                 "node count matches det(C_{n-i-j}) = " + expected.to_string()});
    }

    if (graph.node_count() >= 2) {
        std::mt19937 rng(options.seed);
        std::vector<CanonicalKey> keys;
        for (const auto& [key, dec] : graph.nodes)
            keys.push_back(key);
        std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
        const CanonicalKey& k1 = keys[pick(rng)];
        const CanonicalKey& k2 = keys[pick(rng)];
        bool ok = true;
        std::vector<FlipStep> path = flip_path(graph, k1, k2);
        StarDecomposition cur = graph.nodes.at(k1);
        for (const FlipStep& step : path) {
            FlipResult res = diagonal_flip(cur, step.removed);
            ok &= res.added == step.added && canonical_key(res.decomposition) == step.to;
            cur = std::move(res.decomposition);
        }
        ok &= canonical_key(cur) == k2;
        report.checks.push_back({"flip_replay", ok,
                                 "replayed a " + plural(path.size(), "flip") + " path between random nodes"});
    }
    return report;
}

} // namespace stardec
