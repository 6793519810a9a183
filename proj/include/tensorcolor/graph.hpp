#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tensorcolor/rational.hpp"

namespace tc {

using VertexSet = std::vector<int>; // sorted, unique

/**
 * Simple undirected graph on vertices 0..n-1 with sorted adjacency arrays.
 * Immutable after construction: build through from_edges() (which sorts,
 * deduplicates and rejects loops) and treat instances as values.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_((size_t)std::max(n, 0)) {
        if (n < 0) throw InvalidParams("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return (int)adj_.size(); }
    long long m() const { return edge_count_; }
    int degree(int v) const { return (int)adj_[(size_t)v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[(size_t)v]; }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

/**
 * Set of undirected edges, normalized to u < v and kept sorted.  Used for
 * deletion lists and reconstructed edge sets, where exact symmetric-difference
 * counts matter.
 */
struct EdgeSet {
    std::vector<std::pair<int, int>> e; // normalized, sorted, unique

    static EdgeSet from_pairs(const std::vector<std::pair<int, int>>& pairs);
    static EdgeSet from_graph(const Graph& g);

    bool contains(int u, int v) const;
    size_t size() const { return e.size(); }
};

/** Tensor (categorical) product: (f,g) ~ (f',g') iff f~f' in F and g~g' in G.
 *  Vertex (f,g) is encoded as f*|V(G)|+g. */
Graph tensor_product(const Graph& f, const Graph& g);

/** |Γ(u) ∩ Γ(v)|; for u == v this is deg(u).  Sorted-merge scan. */
long long intersection_size(const Graph& x, int u, int v);

/** |Γ(u) ∩ Γ(v) ∩ Γ(w)| with the same coincident-argument convention. */
long long triple_intersection_size(const Graph& x, int u, int v, int w);

/** Sum of degrees over S (S sorted, duplicate-free, in range). */
long long volume(const Graph& x, std::span<const int> s);

/** Number of edges with exactly one endpoint in S. */
long long cut_size(const Graph& x, std::span<const int> s);

/** |E1 Δ E2|. */
long long symmetric_difference(const EdgeSet& e1, const EdgeSet& e2);

/**
 * Exhaustive check that every cut has at least alpha times the smaller side's
 * volume in crossing edges.  Enumerates all 2^n subsets; refuses graphs above
 * the cap (default 22) rather than degrade silently.
 */
bool is_alpha_edge_expander(const Graph& g, const Rat& alpha, int size_cap = 22);

/**
 * Exhaustive check that every set S with |S| <= delta*n has cut(S) >= alpha*vol(S).
 * Same cap discipline as is_alpha_edge_expander.
 */
bool is_small_set_expander(const Graph& g, const Rat& delta, const Rat& alpha,
                           int size_cap = 22);

/**
 * Floating-point Cheeger-style lower bound on edge conductance, from the
 * second eigenvalue of the lazy random-walk matrix (power iteration with
 * deflation, tolerance 1e-9, at most 1e5 iterations).  Diagnostic only; every
 * guarantee in the library rests on the exhaustive checks above.
 */
double spectral_expansion_lower_bound(const Graph& g);

/** DIMACS-like text format: "p edge n m" then one "e u v" line per edge,
 *  1-based.  The writer emits u < v in lexicographic order. */
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);
Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

/** Adjacency rows as bitsets (words-per-row = ceil(n/64)); fast path for the
 *  dense all-pairs scans in candidate construction. */
struct AdjacencyBits {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> bits; // row-major

    const uint64_t* row(int v) const { return bits.data() + (size_t)v * words; }
    bool test(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }
};

AdjacencyBits adjacency_bits(const Graph& g);

bool is_connected(const Graph& g);

/** Vertex coloring with palette {0, 1, 2}, indexed by vertex id. */
using Coloring3 = std::vector<int8_t>;

/** True when colors has size n, every entry is in {0, 1, 2}, and every edge
 *  is bichromatic. */
bool is_proper_3coloring(const Graph& g, std::span<const int8_t> colors);

} // namespace tc
