#ifndef STARDEC_EXPLORER_HPP
#define STARDEC_EXPLORER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stardec/bigint.hpp"
#include "stardec/border.hpp"
#include "stardec/transform.hpp"

namespace stardec {

// A maximal star decomposition is determined by its diagonal set, so the
// sorted diagonal list is a canonical node key.
using CanonicalKey = std::vector<Diagonal>;

CanonicalKey canonical_key(const StarDecomposition& dec);
std::string key_to_string(const CanonicalKey& key);

struct FlipEdge {
    CanonicalKey a, b;   // a < b
    Diagonal removed;    // flip from a to b removes this ...
    Diagonal added;      // ... and adds this

    friend bool operator==(const FlipEdge&, const FlipEdge&) = default;
    friend auto operator<=>(const FlipEdge&, const FlipEdge&) = default;
};

struct FlipGraph {
    std::map<CanonicalKey, StarDecomposition> nodes;
    std::vector<FlipEdge> edges; // sorted, one record per undirected edge

    size_t node_count() const { return nodes.size(); }
    size_t edge_count() const { return edges.size(); }
};

// Flood fill of all maximal star decompositions by diagonal flips, seeded by
// maximalize(peel_decomposition(P)); empty graph when none exists. Frontier
// expansion runs on OpenMP threads when available; the result is
// deterministic regardless of scheduling.
FlipGraph enumerate_maximal(const CyclicPolygon& poly);

// Single-threaded reference implementation kept for testing and benchmarks.
FlipGraph enumerate_maximal_serial(const CyclicPolygon& poly);

struct FlipStep {
    CanonicalKey from, to;
    Diagonal removed, added;
};

// Shortest flip sequence in the graph transforming node k1 into node k2.
// Throws KeyNotFound.
std::vector<FlipStep> flip_path(const FlipGraph& graph, const CanonicalKey& k1, const CanonicalKey& k2);

// Exhaustive oracle: the canonical keys of all inclusion-maximal all-star
// diagonal subsets, by direct search over subsets of linkable pairs.
// Exponential in p; throws InvalidParameters beyond desk scale.
std::vector<CanonicalKey> direct_search_maximal(const CyclicPolygon& poly);

// Direct-search existence decision: is any diagonal subset all-star?
bool direct_search_admits(const CyclicPolygon& poly);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

struct VerifyOptions {
    int oracle_max_n = 8;       // direct subset search runs when n is at most this
    unsigned seed = 1;          // randomized flip-replay spot check
};

// Runs the whole battery on one polygon: star counts, diagonal counts,
// degree regularity, counting formulas, and (at small n) completeness
// against direct subset search.
VerifyReport verify_suite(const CyclicPolygon& poly, const VerifyOptions& options = {});

} // namespace stardec

#endif
