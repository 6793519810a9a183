#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorcolor/graph.hpp"
#include "tensorcolor/rational.hpp"

namespace tc {

enum class BaseKind { RandomRegular, NoisyHypercube, Complete, OddCycle, TwoCliquesBridged };

struct BaseParams {
    BaseKind kind = BaseKind::RandomRegular;
    int n = 0;   // vertex count (all kinds except NoisyHypercube)
    int d = 0;   // degree (RandomRegular)
    int ell = 0; // hypercube dimension
    Rat beta;    // hypercube noise rate; beta*ell must be integral
};

/**
 * Deterministic generator for the named base-graph families.  RandomRegular
 * starts from a circulant and mixes with double-edge switches, which works at
 * any density; disconnected results trigger further mixing (and eventually
 * GenerationFailed, e.g. for d <= 1 on several vertices).  The other families
 * ignore the seed.  NoisyHypercube joins bitstrings at Hamming distance
 * exactly beta*ell; note that for even beta*ell the graph splits into the two
 * weight-parity classes.
 */
Graph gen_base_graph(const BaseParams& params, uint64_t seed);

struct VertexLabel {
    int color = 0; // which K3 factor vertex, 0..2
    int g = 0;     // which G vertex
};

/**
 * A damaged tensor together with its hidden provenance.  h is K3 x g minus
 * the deleted edges; labels record the true (color, g) coordinates per vertex
 * of h.  Every vertex loses at most floor(epsilon * its tensor degree)
 * incident edges.  Consumers that only see the public part (h, epsilon, seed)
 * get has_ground_truth == false.
 */
struct LabeledInstance {
    Graph g;
    Graph h;
    Rat epsilon;
    uint64_t seed = 0;
    std::vector<VertexLabel> labels;
    EdgeSet deleted;
    bool has_ground_truth = true;
};

enum class DeletionStrategy { Random, RoundRobin, ConfusablePush };

Graph k3();

/** K3 x g with vertex (t, x) encoded as t*|V(g)|+x. */
Graph tensor_with_k3(const Graph& g);

/** Per-vertex deletion allowance: floor(epsilon * tensor degree). */
long long deletion_budget(const Graph& tensor, const Rat& epsilon, int v);

/**
 * Build an instance by damaging K3 x g with the chosen strategy.
 *   Random        - independent epsilon-coin per edge, then budget repair by
 *                   un-deleting the most recent deletion at each over-budget
 *                   vertex until none remains;
 *   RoundRobin    - cycles over vertices deleting one permissible incident
 *                   edge per visit until no vertex can delete;
 *   ConfusablePush- greedily deletes edges that push the neighborhoods of
 *                   same-color vertex pairs with large common G-neighborhoods
 *                   toward each other (best effort, budget-bounded).
 * Identity labeling; compose with relabel_shuffle to hide it.
 */
LabeledInstance make_instance(const Graph& g, const Rat& epsilon,
                              DeletionStrategy strategy, uint64_t seed);

/** Same contract but with an explicit deletion list; throws InvalidParams if a
 *  listed edge is absent from the tensor or some budget is exceeded. */
LabeledInstance make_instance_with_deletions(
    const Graph& g, const Rat& epsilon,
    const std::vector<std::pair<int, int>>& deleted_edges);

LabeledInstance relabel_with_permutation(const LabeledInstance& inst,
                                         const std::vector<int>& perm);
LabeledInstance relabel_shuffle(const LabeledInstance& inst, uint64_t seed);

/** JSON serialization.  Hidden fields live under "ground_truth" so blind runs
 *  can strip them; parsing accepts files without that key. */
std::string instance_to_json(const LabeledInstance& inst, bool include_ground_truth = true);
LabeledInstance instance_from_json(const std::string& text);
void write_instance_file(const std::string& path, const LabeledInstance& inst,
                         bool include_ground_truth = true);
LabeledInstance read_instance_file(const std::string& path);

} // namespace tc
