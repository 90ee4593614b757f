#ifndef STARDEC_TRANSFORM_HPP
#define STARDEC_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "stardec/star.hpp"

namespace stardec {

// A linkable pair between two stars: first splits the first star's angle at
// itself, second splits the second star's angle.
using StarPair = std::pair<VertexId, VertexId>;

// Result of vertex splitting: both stars relabeled onto a circle with
// disjoint vertex sets; to_original maps new indices back to ambient ones
// (both copies of a shared vertex map to it).
struct SplitStars {
    Star first;
    Star second;
    int circle_size = 0;
    std::vector<VertexId> to_original;
};

// Splits every shared vertex of two independent stars into two adjacent
// copies so that crossings and linkable pairs are preserved one-to-one.
// Identity relabeling when the vertex sets are already disjoint.
// Throws NotIndependent.
SplitStars split_shared_vertices(const Star& s1, const Star& s2);

// All pairs (a in s1, b in s2) whose segment splits s1's angle at a and
// s2's angle at b; shared vertices are routed through split_shared_vertices.
// The count is odd for independent stars and the chords pairwise cross.
std::vector<StarPair> linkable_pairs_between(const Star& s1, const Star& s2);

// Weight profile of two vertex-disjoint stars on a merged circle of 2s
// points: w(i) counts first-star vertices in the forward half-window minus
// the backward one. Linkable pairs are exactly the antipodal pairs at
// weight-zero class indices.
struct WeightProfile {
    int half = 0;                   // s; total merged vertex count is 2s
    std::vector<VertexId> points;   // merged vertices in anticlockwise order
    std::vector<bool> is_first;     // label per index: belongs to s1
    std::vector<int> w;             // weight per index
    std::vector<int> cls;           // 0, 1 or 2 per index

    // Pairs (points[i], points[i+s]) with i in W1 and w(i) == 0.
    std::vector<StarPair> zero_pairs() const;
};

WeightProfile weight_profile(const Star& s1, const Star& s2); // throws OddTotal / NotIndependent

// Star subdivision: rebuilds two stars using two distinct linkable
// pairs as new diagonals. The union of the outputs' edges equals the union
// of the inputs' plus both orientations of both pairs.
// Throws NotLinkablePair or PairsEqual.
std::pair<Star, Star> star_subdivision(const Star& s1, const Star& s2, StarPair p1, StarPair p2);

struct FlipResult {
    StarDecomposition decomposition;
    Diagonal added;
};

// Flips diagonal e of a maximal star decomposition to the unique diagonal f
// restoring a maximal star decomposition. Throws DiagonalNotInD, or
// NotMaximal when the double star sharing e has more than one linkable pair.
FlipResult diagonal_flip(const StarDecomposition& dec, Diagonal e);

// Variant for possibly non-maximal inputs: flips e to the explicitly chosen
// linkable pair f of the double star sharing e.
FlipResult diagonal_flip_to(const StarDecomposition& dec, Diagonal e, Diagonal f);

// Grows the diagonal set by star subdivisions (two lexicographically
// smallest pairs of the first star pair with >= 3) until every pair of stars
// has exactly one linkable pair.
StarDecomposition maximalize(const StarDecomposition& dec);

} // namespace stardec

#endif
