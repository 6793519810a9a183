#pragma once

#include <optional>
#include <vector>

#include "tensorcolor/core_factor.hpp"
#include "tensorcolor/graph.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

struct PipelineCaps {
    long long triangle_cap = 2'000'000; // 0 disables the cap
};

struct ReconstructionStats {
    long long n_triangles = 0;
    long long n_components = 0;
    long long n_accepted = 0;
    long long n_rejected_factor = 0;
    long long n_rejected_cut = 0;
    long long n_skipped_overlap = 0;
};

struct Reconstruction {
    std::vector<ComponentFactorization> components; // in acceptance order
    Graph g_tilde;      // disjoint union of the per-component factors
    EdgeSet h_tilde;    // union of the per-component product edges
    long long error_delta = 0; // |E(H) xor E(H~)|
    Rat epsilon;
    ReconstructionStats stats;
};

/**
 * Greedy cover of V(H) by factored components.  Compatibility components are
 * visited by descending cover size (ties by smallest triangle id); a
 * component is skipped when its triangles overlap, clipped to the still
 * uncovered vertices, factored via core_factor, and accepted only when the cut
 * to the rest of the uncovered set is at most 5e/(1-e) times the smaller
 * volume.  Accepted sets must come out atomic in the candidate graph (and
 * leave an atomic remainder); a violation indicates an internal error and
 * throws.  Throws IncompleteCover when vertices remain at the end.
 */
Reconstruction main_reconstruct(const Graph& h, const Rat& epsilon,
                                const PipelineCaps& caps = {});

/**
 * Proper 3-coloring read off a single compatibility component covering every
 * vertex.  Components are tried in ascending order of smallest triangle id;
 * the first whose propagated classes form a proper coloring wins.  nullopt
 * when no component covers V(H) or none yields a proper coloring.
 */
std::optional<Coloring3> full_3_coloring(const Graph& h, const Rat& epsilon,
                                         const PipelineCaps& caps = {});

/**
 * Proper 3-coloring assembled from at most k vertex-disjoint compatibility
 * components that together cover V(H), trying the 6 class-to-color
 * assignments per chosen component.  Deterministic search order: component
 * subsets lexicographically by component id, then permutation indices.
 * Edgeless H is trivially colorable for every k >= 0.
 */
std::optional<Coloring3> color_with_k_core_components(const Graph& h,
                                                      const Rat& epsilon, int k,
                                                      const PipelineCaps& caps = {});

struct EpsilonSearchResult {
    Rat epsilon;
    Reconstruction reconstruction;
};

/**
 * Smallest workable noise rate on the grid 2^-t, t in [6, 30]: binary search
 * (feasibility is monotone in epsilon) for the largest t whose reconstruction
 * covers V(H) with error at most 550 * epsilon * |E(H)|.  Throws
 * NotNearTensor when even t = 6 fails.
 */
EpsilonSearchResult epsilon_search(const Graph& h, const PipelineCaps& caps = {});

} // namespace tc
