#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tensorcolor/graph.hpp"
#include "tensorcolor/matching.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

/**
 * Exhaustive 3-coloring by backtracking with forced-move propagation and a
 * sound two-vertex symmetry break (an arbitrary vertex pinned to color 0, one
 * of its neighbors to color 1).  Deterministic.  Returns a proper coloring or
 * nullopt when none exists; throws SizeCapExceeded above the vertex cap.
 */
std::optional<Coloring3> brute_force_3coloring(const Graph& g, int size_cap = 150);

/** Bottleneck assignment by scanning all k! pairings (k <= 8): maximizes the
 *  minimum weight along the matching.  pairing[i] is the right partner of
 *  left vertex i; first optimum in lexicographic pairing order. */
MatchResult brute_force_bottleneck(const WeightedBipartite& w);

/** |(N(g1) u N(g2) u N(g3)) \ (N(g1) n N(g2) n N(g3))| taken literally,
 *  repeated arguments and all. */
long long disjunction(const Graph& g, int g1, int g2, int g3);

/** Common-neighborhood test |N(g1) n N(g2)| > (1-9e) * max(deg g1, deg g2),
 *  strict, exact arithmetic; g1 == g2 compares the degree against itself. */
bool confusable(const Graph& g, int g1, int g2, const Rat& epsilon);

} // namespace tc
