#pragma once

#include <span>
#include <string>
#include <vector>

#include "tensorcolor/candidate.hpp"
#include "tensorcolor/graph.hpp"
#include "tensorcolor/matching.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

/** Three-way vertex partition; cls[v] in {0,1,2} or -1 when v is untouched. */
struct Partition3 {
    std::vector<int8_t> cls;
};

struct ColorComponentResult {
    bool ok = false;
    std::string fail_reason; // empty on success
    Partition3 partition;    // covers exactly the component's vertices on success
};

/**
 * Propagates three classes across one compatibility component: the
 * lowest-id triangle gets classes 0,1,2 on its sorted vertices, and each
 * compatibility edge copies the class of a vertex to the unique non-adjacent
 * vertex of the partner triangle (breadth-first from the seed, partners in
 * ascending enumeration order).  Fails when two propagation paths disagree on
 * a vertex.  Triangles may share vertices; agreement is still required.
 */
ColorComponentResult color_component(const TriangleSystem& sys,
                                     const TriangleComponentInfo& comp);

/**
 * One factored component: a set U of vertices together with the color class
 * and factor vertex of each, the recovered factor graph on |U|/3 vertices,
 * and the product edges it induces inside U.
 */
struct ComponentFactorization {
    std::vector<int> vertices;     // sorted ascending
    std::vector<int8_t> color_map; // aligned with vertices
    std::vector<int> g_map;        // aligned with vertices; values in [0, |U|/3)
    Graph g_tilde;
    EdgeSet h_tilde;
};

enum class CoreFactorFail {
    None,
    ComponentColoring,
    ClassSizes,
    NotAColoring,
    MatchingQuality,
    ErrorBound,
};

std::string to_string(CoreFactorFail f);

struct CoreFactorResult {
    CoreFactorFail fail = CoreFactorFail::None;
    ComponentFactorization factorization; // populated when fail == None
    Rat quality_ab;                       // bottleneck objectives, set once the
    Rat quality_bc;                       // matching stage is reached
    long long delta = -1;                 // reconstruction error, set once computed
};

/**
 * Attempts to factor H[U] as K3 x G~ for U inside one compatibility
 * component's cover.  Stages, each with its own failure tag: class
 * propagation over the component; equal class sizes within U; the classes
 * forming a proper coloring of H[U]; two bottleneck matchings (A-B and B-C)
 * of quality at least 1-6*epsilon; and the reconstruction error
 * |E(H[U]) xor E(H~)| within 260*epsilon*vol_H(U) + |U|.  With
 * use_internal_edge_bound the last bound reads 260*epsilon*|E(H[U])| + |U|
 * instead (tighter, since vol counts edges leaving U too).
 */
CoreFactorResult core_factor(const TriangleSystem& sys,
                             const TriangleComponentInfo& comp,
                             std::span<const int> u, const Rat& epsilon,
                             bool use_internal_edge_bound = false);

} // namespace tc
