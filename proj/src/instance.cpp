#include "tensorcolor/instance.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tensorcolor/errors.hpp"
#include "tensorcolor/rng.hpp"

namespace tc {

namespace {

Graph gen_random_regular(int n, int d, uint64_t seed) {
    if (n < 1 || d < 0 || d >= n || (1LL * n * d) % 2 != 0)
        throw InvalidParams("random regular graph needs 0 <= d < n and n*d even");
    if (n == 1) return Graph(1);
    if (d == 0)
        throw GenerationFailed("0-regular graphs on several vertices are disconnected");

    // Circulant start, then double-edge-switch mixing.  Pairing-model
    // rejection would almost never produce a simple graph at degrees
    // comparable to n, while switches keep every intermediate graph simple
    // and d-regular at any density.
    std::vector<std::pair<int, int>> edges;
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + off) % n);
    if (d % 2 == 1) // n is even here since n*d is
        for (int v = 0; v < n / 2; ++v) edges.emplace_back(v, v + n / 2);
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);

    const size_t words = ((size_t)n + 63) / 64;
    std::vector<uint64_t> bits((size_t)n * words, 0);
    auto has = [&](int u, int v) {
        return (bits[(size_t)u * words + (size_t)(v >> 6)] >> (v & 63)) & 1u;
    };
    auto flip = [&](int u, int v) {
        bits[(size_t)u * words + (size_t)(v >> 6)] ^= 1ULL << (v & 63);
        bits[(size_t)v * words + (size_t)(u >> 6)] ^= 1ULL << (u & 63);
    };
    for (auto [u, v] : edges) flip(u, v);

    Rng rng(seed);
    const long long m = (long long)edges.size();
    auto mix = [&](long long rounds) {
        for (long long it = 0; it < rounds; ++it) {
            auto& e1 = edges[(size_t)rng.uniform((uint64_t)m)];
            auto& e2 = edges[(size_t)rng.uniform((uint64_t)m)];
            int a = e1.first, b = e1.second, c = e2.first, x = e2.second;
            if (rng.uniform(2)) std::swap(c, x);
            if (a == c || a == x || b == c || b == x) continue;
            if (has(a, c) || has(b, x)) continue;
            flip(a, b);
            flip(c, x);
            flip(a, c);
            flip(b, x);
            e1 = {std::min(a, c), std::max(a, c)};
            e2 = {std::min(b, x), std::max(b, x)};
        }
    };

    for (int round = 0; round < 50; ++round) {
        mix(10 * m);
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw GenerationFailed("edge switching failed to reach a connected graph for n=" +
                           std::to_string(n) + " d=" + std::to_string(d));
}

Graph gen_noisy_hypercube(int ell, const Rat& beta) {
    if (ell < 1 || ell > 20) throw InvalidParams("hypercube dimension out of range");
    Rat target = beta * Rat(ell);
    if (target.den != 1 || target.num < 1 || target.num > ell)
        throw InvalidParams("beta*ell must be an integer in [1, ell]");
    int dist = (int)target.num;
    int n = 1 << ell;
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (std::popcount((unsigned)(x ^ y)) == dist) edges.emplace_back(x, y);
    return Graph::from_edges(n, edges);
}

Graph gen_complete(int n) {
    if (n < 1) throw InvalidParams("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_odd_cycle(int n) {
    if (n < 3 || n % 2 == 0) throw InvalidParams("odd cycle needs odd n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph gen_two_cliques_bridged(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidParams("bridged cliques need even n >= 4");
    int half = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < half; ++u)
        for (int v = u + 1; v < half; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(half + u, half + v);
        }
    edges.emplace_back(0, half);
    return Graph::from_edges(n, edges);
}

} // namespace

Graph gen_base_graph(const BaseParams& p, uint64_t seed) {
    switch (p.kind) {
        case BaseKind::RandomRegular: return gen_random_regular(p.n, p.d, seed);
        case BaseKind::NoisyHypercube: return gen_noisy_hypercube(p.ell, p.beta);
        case BaseKind::Complete: return gen_complete(p.n);
        case BaseKind::OddCycle: return gen_odd_cycle(p.n);
        case BaseKind::TwoCliquesBridged: return gen_two_cliques_bridged(p.n);
    }
    throw InvalidParams("unknown base graph kind");
}

Graph k3() {
    return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

Graph tensor_with_k3(const Graph& g) {
    return tensor_product(k3(), g);
}

long long deletion_budget(const Graph& tensor, const Rat& epsilon, int v) {
    return epsilon.floor_mul(tensor.degree(v));
}

namespace {

void check_epsilon(const Rat& eps) {
    if (eps < Rat(0) || eps >= Rat(1))
        throw InvalidParams("epsilon must lie in [0, 1)");
}

std::vector<std::pair<int, int>> delete_random(const Graph& tensor, const Rat& eps,
                                               Rng& rng) {
    std::vector<long long> budget((size_t)tensor.n());
    for (int v = 0; v < tensor.n(); ++v) budget[(size_t)v] = deletion_budget(tensor, eps, v);
    std::vector<std::pair<int, int>> del;
    for (auto [u, v] : tensor.edges())
        if (rng.coin(eps)) del.emplace_back(u, v);
    std::vector<long long> count((size_t)tensor.n(), 0);
    for (auto [u, v] : del) { ++count[(size_t)u]; ++count[(size_t)v]; }
    // Budget repair: un-delete the most recent deletion at the lowest
    // over-budget vertex until every vertex is within budget.
    for (;;) {
        int bad = -1;
        for (int v = 0; v < tensor.n(); ++v)
            if (count[(size_t)v] > budget[(size_t)v]) { bad = v; break; }
        if (bad < 0) break;
        for (size_t i = del.size(); i-- > 0;) {
            auto [u, v] = del[i];
            if (u == bad || v == bad) {
                --count[(size_t)u];
                --count[(size_t)v];
                del.erase(del.begin() + (long long)i);
                break;
            }
        }
    }
    return del;
}

std::vector<std::pair<int, int>> delete_round_robin(const Graph& tensor, const Rat& eps) {
    std::vector<long long> budget((size_t)tensor.n()), count((size_t)tensor.n(), 0);
    for (int v = 0; v < tensor.n(); ++v) budget[(size_t)v] = deletion_budget(tensor, eps, v);
    std::vector<std::pair<int, int>> del;
    EdgeSet removed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < tensor.n(); ++v) {
            if (count[(size_t)v] >= budget[(size_t)v]) continue;
            for (int u : tensor.neighbors(v)) {
                if (count[(size_t)u] >= budget[(size_t)u]) continue;
                if (removed.contains(v, u)) continue;
                del.emplace_back(std::min(v, u), std::max(v, u));
                removed = EdgeSet::from_pairs(del);
                ++count[(size_t)v];
                ++count[(size_t)u];
                progress = true;
                break;
            }
        }
    }
    return del;
}

std::vector<std::pair<int, int>> delete_confusable_push(const Graph& g,
                                                        const Graph& tensor,
                                                        const Rat& eps) {
    int ng = g.n();
    std::vector<long long> budget((size_t)tensor.n()), count((size_t)tensor.n(), 0);
    for (int v = 0; v < tensor.n(); ++v) budget[(size_t)v] = deletion_budget(tensor, eps, v);
    // Rank G-pairs by shared neighborhood size, largest first.
    std::vector<std::tuple<long long, int, int>> pairs;
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b) {
            long long common = intersection_size(g, a, b);
            if (common > 0) pairs.emplace_back(-common, a, b);
        }
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::pair<int, int>> del;
    auto edge_key = [&](int u, int v) {
        return std::make_pair(std::min(u, v), std::max(u, v));
    };
    std::vector<std::pair<int, int>> del_sorted;
    auto is_deleted = [&](int u, int v) {
        auto key = edge_key(u, v);
        return std::binary_search(del_sorted.begin(), del_sorted.end(), key);
    };
    auto try_delete = [&](int u, int v) {
        if (!tensor.has_edge(u, v) || is_deleted(u, v)) return;
        if (count[(size_t)u] >= budget[(size_t)u]) return;
        if (count[(size_t)v] >= budget[(size_t)v]) return;
        del.push_back(edge_key(u, v));
        del_sorted.insert(std::lower_bound(del_sorted.begin(), del_sorted.end(),
                                           edge_key(u, v)),
                          edge_key(u, v));
        ++count[(size_t)u];
        ++count[(size_t)v];
    };
    for (auto& [neg_common, a, b] : pairs) {
        (void)neg_common;
        // Delete tensor edges that are in one of the two neighborhoods only,
        // pushing (t,a) and (t,b) toward identical H-neighborhoods.
        for (int gp : g.neighbors(a))
            if (!g.has_edge(b, gp) && gp != b)
                for (int t = 0; t < 3; ++t)
                    for (int tp = 0; tp < 3; ++tp)
                        if (t != tp) try_delete(t * ng + a, tp * ng + gp);
        for (int gp : g.neighbors(b))
            if (!g.has_edge(a, gp) && gp != a)
                for (int t = 0; t < 3; ++t)
                    for (int tp = 0; tp < 3; ++tp)
                        if (t != tp) try_delete(t * ng + b, tp * ng + gp);
    }
    return del;
}

LabeledInstance assemble(const Graph& g, const Rat& eps, uint64_t seed,
                         const Graph& tensor,
                         std::vector<std::pair<int, int>> deleted) {
    LabeledInstance inst;
    inst.g = g;
    inst.epsilon = eps;
    inst.seed = seed;
    inst.deleted = EdgeSet::from_pairs(deleted);
    auto remaining = tensor.edges();
    std::vector<std::pair<int, int>> kept;
    kept.reserve(remaining.size());
    for (auto& edge : remaining)
        if (!inst.deleted.contains(edge.first, edge.second)) kept.push_back(edge);
    inst.h = Graph::from_edges(tensor.n(), kept);
    inst.labels.resize((size_t)tensor.n());
    for (int t = 0; t < 3; ++t)
        for (int x = 0; x < g.n(); ++x)
            inst.labels[(size_t)(t * g.n() + x)] = VertexLabel{t, x};
    return inst;
}

} // namespace

LabeledInstance make_instance(const Graph& g, const Rat& eps,
                              DeletionStrategy strategy, uint64_t seed) {
    check_epsilon(eps);
    Graph tensor = tensor_with_k3(g);
    std::vector<std::pair<int, int>> deleted;
    switch (strategy) {
        case DeletionStrategy::Random: {
            Rng rng(seed);
            deleted = delete_random(tensor, eps, rng);
            break;
        }
        case DeletionStrategy::RoundRobin:
            deleted = delete_round_robin(tensor, eps);
            break;
        case DeletionStrategy::ConfusablePush:
            deleted = delete_confusable_push(g, tensor, eps);
            break;
    }
    return assemble(g, eps, seed, tensor, std::move(deleted));
}

LabeledInstance make_instance_with_deletions(
    const Graph& g, const Rat& eps,
    const std::vector<std::pair<int, int>>& deleted_edges) {
    check_epsilon(eps);
    Graph tensor = tensor_with_k3(g);
    std::vector<long long> count((size_t)tensor.n(), 0);
    for (auto [u, v] : deleted_edges) {
        if (!tensor.has_edge(u, v))
            throw InvalidParams("deleted edge not present in tensor");
        ++count[(size_t)u];
        ++count[(size_t)v];
    }
    for (int v = 0; v < tensor.n(); ++v)
        if (count[(size_t)v] > deletion_budget(tensor, eps, v))
            throw InvalidParams("deletion budget exceeded at vertex " +
                                std::to_string(v));
    return assemble(g, eps, 0, tensor, deleted_edges);
}

LabeledInstance relabel_with_permutation(const LabeledInstance& inst,
                                         const std::vector<int>& perm) {
    int n = inst.h.n();
    if ((int)perm.size() != n) throw InvalidParams("permutation size mismatch");
    std::vector<char> seen((size_t)n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[(size_t)p])
            throw InvalidParams("not a permutation");
        seen[(size_t)p] = 1;
    }
    LabeledInstance out = inst;
    std::vector<std::pair<int, int>> h_edges;
    for (auto [u, v] : inst.h.edges()) h_edges.emplace_back(perm[(size_t)u], perm[(size_t)v]);
    out.h = Graph::from_edges(n, h_edges);
    out.labels.assign((size_t)n, VertexLabel{});
    for (int v = 0; v < n; ++v) out.labels[(size_t)perm[(size_t)v]] = inst.labels[(size_t)v];
    std::vector<std::pair<int, int>> del;
    for (auto [u, v] : inst.deleted.e) del.emplace_back(perm[(size_t)u], perm[(size_t)v]);
    out.deleted = EdgeSet::from_pairs(del);
    return out;
}

LabeledInstance relabel_shuffle(const LabeledInstance& inst, uint64_t seed) {
    std::vector<int> perm((size_t)inst.h.n());
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    return relabel_with_permutation(inst, perm);
}

namespace {

nlohmann::ordered_json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto [u, v] : edges) arr.push_back({u, v});
    return arr;
}

std::vector<std::pair<int, int>> edges_from_json(const nlohmann::json& arr) {
    std::vector<std::pair<int, int>> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2)
            throw InvalidParams("edge entries must be [u, v] pairs");
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

} // namespace

std::string instance_to_json(const LabeledInstance& inst, bool include_ground_truth) {
    nlohmann::ordered_json j;
    j["n_h"] = inst.h.n();
    j["epsilon"] = inst.epsilon.to_string();
    j["seed"] = inst.seed;
    j["h_edges"] = edges_to_json(inst.h.edges());
    if (include_ground_truth && inst.has_ground_truth) {
        nlohmann::ordered_json gt;
        gt["n_g"] = inst.g.n();
        gt["g_edges"] = edges_to_json(inst.g.edges());
        nlohmann::ordered_json labels = nlohmann::ordered_json::array();
        for (const auto& label : inst.labels) labels.push_back({label.color, label.g});
        gt["labels"] = labels;
        gt["deleted_edges"] = edges_to_json(inst.deleted.e);
        j["ground_truth"] = gt;
    }
    return j.dump(2) + "\n";
}

LabeledInstance instance_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("bad instance JSON: ") + e.what());
    }
    LabeledInstance inst;
    try {
        int n_h = j.at("n_h").get<int>();
        inst.h = Graph::from_edges(n_h, edges_from_json(j.at("h_edges")));
        inst.epsilon = Rat::parse(j.at("epsilon").get<std::string>());
        inst.seed = j.value("seed", (uint64_t)0);
        if (j.contains("ground_truth")) {
            const auto& gt = j.at("ground_truth");
            int n_g = gt.at("n_g").get<int>();
            inst.g = Graph::from_edges(n_g, edges_from_json(gt.at("g_edges")));
            const auto& labels = gt.at("labels");
            if ((int)labels.size() != n_h)
                throw InvalidParams("label array size mismatch");
            inst.labels.reserve((size_t)n_h);
            for (const auto& item : labels)
                inst.labels.push_back(VertexLabel{item[0].get<int>(), item[1].get<int>()});
            inst.deleted = EdgeSet::from_pairs(edges_from_json(gt.at("deleted_edges")));
            inst.has_ground_truth = true;
        } else {
            inst.has_ground_truth = false;
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("bad instance JSON: ") + e.what());
    }
    return inst;
}

void write_instance_file(const std::string& path, const LabeledInstance& inst,
                         bool include_ground_truth) {
    std::ofstream out(path);
    if (!out) throw InvalidParams("cannot open " + path);
    out << instance_to_json(inst, include_ground_truth);
}

LabeledInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

} // namespace tc
