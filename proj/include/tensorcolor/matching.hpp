#pragma once

#include <span>
#include <vector>

#include "tensorcolor/graph.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

/** Dense bipartite weight matrix, row-major: at(i, j) is left i vs right j. */
struct WeightedBipartite {
    int k_left = 0;
    int k_right = 0;
    std::vector<Rat> w;

    static WeightedBipartite zeros(int k_left, int k_right);
    Rat& at(int i, int j) { return w[static_cast<size_t>(i) * k_right + j]; }
    const Rat& at(int i, int j) const { return w[static_cast<size_t>(i) * k_right + j]; }
};

struct MatchResult {
    std::vector<int> pairing; // pairing[left] = right
    Rat objective;            // min weight along the matching
};

/**
 * Bottleneck perfect matching on a square matrix: maximize the minimum
 * matched weight.  Binary search over the sorted distinct weights, with an
 * augmenting-path feasibility check at each threshold (ascending-id scan, so
 * the returned pairing is deterministic).  Feasibility is monotone in the
 * threshold; that is re-verified at the boundary after the search.  k == 0
 * returns an empty pairing with objective 1.
 */
MatchResult bottleneck_matching(const WeightedBipartite& w);

/**
 * Weight matrices between the color classes of a candidate component:
 * w(x, y) = 2 * |N_H(x) n N_H(y)| / max(deg x, deg y), zero when both
 * degrees vanish.  Returns the A-vs-B and B-vs-C matrices, in that order.
 * Classes must have equal sizes.
 */
std::pair<WeightedBipartite, WeightedBipartite> tripartite_weights(
    const Graph& h, std::span<const int> a, std::span<const int> b,
    std::span<const int> c);

} // namespace tc
