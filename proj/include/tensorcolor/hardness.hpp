#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tensorcolor/graph.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

/**
 * Coloring constraints over one vertex set: neq edges force different colors,
 * eq edges force equal colors.  Vertices [0, n_base) are the originals; any
 * vertices beyond are equality clouds, each tied by eq edges to the original
 * recorded in owner.
 */
struct EqualityInstance {
    int n = 0;
    int n_base = 0;
    EdgeSet neq;
    EdgeSet eq;
    std::vector<int> owner; // owner[v] == v for originals
};

/** Wraps a plain graph: neq = E(G), no clouds. */
EqualityInstance plain_equality_instance(const Graph& g);

/**
 * Adds a cloud of ceil(deg(v)/epsilon) fresh vertices per original, each tied
 * to v by one eq edge.  Padding dilutes every original's neq degree below an
 * epsilon fraction of its total degree (clouds have neq degree zero), which
 * is what the looseness check below certifies.
 */
EqualityInstance make_equality_instance(const Graph& g, const Rat& epsilon);

/** Every vertex has neq-degree at most epsilon times its total degree. */
bool is_epsilon_loose(const EqualityInstance& inst, const Rat& epsilon);

/** assignment (values 0..2, one per vertex) meets every neq and eq edge. */
bool satisfies(const EqualityInstance& inst, std::span<const int> assignment);

/**
 * The hard graph: one 3x3x3 cube per instance vertex, at ids v*27 + code(x)
 * with code(x) = 9*x1 + 3*x2 + x3.  Cube-internal edges (and edges across eq
 * pairs) connect tuples differing in every coordinate; edges across neq pairs
 * connect tuples with x_i != y_j for every i != j.
 */
struct ReducedGraph {
    EqualityInstance base;
    Graph graph;
};

ReducedGraph tensor_reduction(const EqualityInstance& inst);

/**
 * Witness that a satisfying assignment makes the hard graph near-tensor: a
 * graph G' on pairs (v, y) at v*9 + 3*y1 + y2, and an injection pi from
 * K3 x G' vertex ids (color * |V(G')| + p) onto V(reduced), inserting the
 * color as coordinate assignment[v] of the cube tuple.
 */
struct CompletenessFactor {
    Graph g_prime;
    std::vector<int> pi;
};

CompletenessFactor completeness_factor(const ReducedGraph& rg,
                                       std::span<const int> assignment);

/** Fraction of K3 x G' edges whose pi-image is not present in the hard
 *  graph, exact. */
Rat missing_fraction(const ReducedGraph& rg, const CompletenessFactor& cf);

/**
 * Worst case over hard-graph vertices of (incident pi-image edges absent from
 * the hard graph) / (incident pi-image edges), exact.  This is the quantity
 * the near-tensor deletion model budgets per vertex.
 */
Rat worst_vertex_missing_fraction(const ReducedGraph& rg,
                                  const CompletenessFactor& cf);

/**
 * Dictatorship test for a proper 3-coloring of the ell-fold tensor power of
 * the triangle (vertices = [3]^ell, code with the first coordinate most
 * significant; edges connect tuples differing everywhere).  Returns the
 * coordinate i and the permutation eta with coloring(x) = eta(x_i), or
 * nullopt when no coordinate fits.  Throws NotAProperColoring on an improper
 * input.  ell is capped at 8.
 */
std::optional<std::pair<int, std::array<int, 3>>> decode_dictator(
    int ell, std::span<const int8_t> coloring);

/**
 * Reads a satisfying assignment of the base instance off a proper 3-coloring
 * of the hard graph: each cube must be colored by a dictator, and the
 * dictating coordinate is the vertex's color.  Throws NotAProperColoring on
 * an improper coloring; returns nullopt if any cube fails to decode or the
 * decoded assignment misses a constraint.
 */
std::optional<std::vector<int>> soundness_extract(const ReducedGraph& rg,
                                                  std::span<const int8_t> coloring);

} // namespace tc
