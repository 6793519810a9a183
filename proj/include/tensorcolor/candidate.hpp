#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tensorcolor/graph.hpp"
#include "tensorcolor/instance.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

/** Triangle of the candidate graph, vertices sorted ascending. */
struct Triangle {
    std::array<int, 3> v{};

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.v == b.v; }
    friend bool operator<(const Triangle& a, const Triangle& b) { return a.v < b.v; }
};

/** Degrees within a factor 1-2*epsilon of each other, measured against the
 *  larger one: deg_max - deg_min <= 2*epsilon*deg_max. */
bool epsilon_similar_degree(const Graph& h, int u, int v, const Rat& epsilon);

/**
 * Candidate pair test: similar degrees, and the common neighborhood sits in
 * [(1-6e)/2, 1/(2(1-e))] times the larger degree, both ends inclusive,
 * evaluated in exact arithmetic.  Pairs of isolated vertices are excluded:
 * with both degrees zero the window is vacuously [0,0] but carries no signal.
 */
bool is_candidate_edge(const Graph& h, int u, int v, const Rat& epsilon);

struct CandidateGraph {
    Graph edges;                 // the graph C on V(H)
    Rat epsilon;
    std::vector<int> component_of; // per-vertex component id, 0-based, ordered by
                                   // smallest member vertex
    int n_components = 0;
};

CandidateGraph build_candidate_graph(const Graph& h, const Rat& epsilon);

/** True when S is a union of whole components of C (S sorted, unique). */
bool is_atomic(const CandidateGraph& c, std::span<const int> s);

/** All triangles of c in lexicographic order.  cap > 0 bounds the count
 *  (CapExceeded beyond it); cap == 0 means unbounded. */
std::vector<Triangle> enumerate_triangles(const Graph& c, long long cap = 0);

/**
 * Compatibility test: vertex-disjoint triangles admitting an indexing where
 * the nine cross pairs are H-edges exactly off the diagonal.  Returns the
 * matching ordering of t2 (position i holds the vertex paired against
 * t1.v[i]), trying the six orderings in lexicographic order and returning the
 * first hit.  Pairs spanning fewer than six H-edges are pruned before the
 * ordering search.
 */
std::optional<std::array<int, 3>> compatible(const Graph& h, const Triangle& t1,
                                             const Triangle& t2);

struct TriangleComponentInfo {
    std::vector<int> triangle_ids; // ascending
    VertexSet covered;             // union of member triangle vertices
};

/**
 * The triangle compatibility structure over a fixed triangle list.  Adjacency
 * is generated on demand rather than stored: for a triangle T the candidate
 * partners are read off the three sets A_i = {v : v H-adjacent to both of
 * T \ {T[i]}, not to T[i]}, which by the off-diagonal pattern contain exactly
 * one vertex of every compatible partner each.  That keeps dense instances
 * (where the compatibility graph has far more edges than triangles) inside
 * memory, and agrees with compatible() edge-for-edge.
 */
class TriangleSystem {
public:
    /** Takes its own copies of both graphs, so it outlives the originals. */
    TriangleSystem(Graph h, Graph c, std::vector<Triangle> triangles);

    const Graph& h() const { return h_; }
    const Graph& c() const { return c_; }
    const std::vector<Triangle>& triangles() const { return tris_; }
    int triangle_id(const Triangle& t) const; // -1 when absent

    /** Calls fn(partner_id, aligned) for every triangle compatible with
     *  tris[id]; aligned[i] is the partner's vertex non-adjacent to
     *  tris[id].v[i].  Deterministic ascending enumeration. */
    void for_each_compatible(
        int id, const std::function<void(int, const std::array<int, 3>&)>& fn) const;

    std::vector<int> compatible_ids(int id) const;

private:
    Graph h_;
    Graph c_;
    AdjacencyBits h_bits_;
    AdjacencyBits c_bits_;
    std::vector<Triangle> tris_;
};

struct TriangleComponents {
    std::vector<Triangle> triangles;
    std::vector<int> component_of;              // per triangle
    std::vector<TriangleComponentInfo> components; // ordered by smallest triangle id
};

TriangleComponents triangle_components(const TriangleSystem& sys);

enum class TriangleClass { Core, QuasiCore, Monochrome, Other };

/**
 * Ground-truth classification of a triangle: Core when the labels are the
 * three colors of a single G-vertex; QuasiCore when the colors are distinct
 * and the G-classes pairwise confusable; Monochrome when one color class with
 * pairwise G-intersections near a quarter of the top H-degree; Other else.
 */
TriangleClass classify_triangle_ground_truth(const LabeledInstance& inst,
                                             const Triangle& t);

} // namespace tc
