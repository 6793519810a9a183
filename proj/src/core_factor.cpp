#include "tensorcolor/core_factor.hpp"

#include <algorithm>
#include <deque>

#include "tensorcolor/errors.hpp"

namespace tc {

ColorComponentResult color_component(const TriangleSystem& sys,
                                     const TriangleComponentInfo& comp) {
    ColorComponentResult out;
    out.partition.cls.assign((size_t)sys.h().n(), -1);
    if (comp.triangle_ids.empty())
        throw InvalidParams("color_component: empty component");

    auto& cls = out.partition.cls;
    const auto& tris = sys.triangles();

    std::vector<char> queued((size_t)tris.size(), 0);
    std::deque<int> queue;
    int seed = comp.triangle_ids.front();
    for (int i = 0; i < 3; ++i) cls[(size_t)tris[(size_t)seed].v[(size_t)i]] = (int8_t)i;
    queue.push_back(seed);
    queued[(size_t)seed] = 1;
    long long visited = 0;

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        ++visited;
        const auto& tv = tris[(size_t)cur].v;
        bool conflict = false;
        sys.for_each_compatible(cur, [&](int other, const std::array<int, 3>& aligned) {
            if (conflict) return;
            for (int i = 0; i < 3; ++i) {
                int8_t want = cls[(size_t)tv[(size_t)i]];
                int8_t& slot = cls[(size_t)aligned[(size_t)i]];
                if (slot == -1)
                    slot = want;
                else if (slot != want) {
                    conflict = true;
                    return;
                }
            }
            if (!queued[(size_t)other]) {
                queued[(size_t)other] = 1;
                queue.push_back(other);
            }
        });
        if (conflict) {
            out.fail_reason = "class conflict";
            return out;
        }
    }
    if (visited != (long long)comp.triangle_ids.size())
        throw std::logic_error("color_component: component not connected");
    out.ok = true;
    return out;
}

std::string to_string(CoreFactorFail f) {
    switch (f) {
        case CoreFactorFail::None: return "none";
        case CoreFactorFail::ComponentColoring: return "component-coloring";
        case CoreFactorFail::ClassSizes: return "class-sizes";
        case CoreFactorFail::NotAColoring: return "not-a-coloring";
        case CoreFactorFail::MatchingQuality: return "matching-quality";
        case CoreFactorFail::ErrorBound: return "error-bound";
    }
    return "unknown";
}

CoreFactorResult core_factor(const TriangleSystem& sys,
                             const TriangleComponentInfo& comp,
                             std::span<const int> u, const Rat& epsilon,
                             bool use_internal_edge_bound) {
    const Graph& h = sys.h();
    CoreFactorResult res;

    auto cc = color_component(sys, comp);
    if (!cc.ok) {
        res.fail = CoreFactorFail::ComponentColoring;
        return res;
    }

    std::vector<int> classes[3];
    std::vector<char> in_u((size_t)h.n(), 0);
    for (size_t i = 0; i < u.size(); ++i) {
        int v = u[i];
        if (v < 0 || v >= h.n() || (i > 0 && u[i - 1] >= v))
            throw InvalidParams("core_factor: U must be sorted, unique, in range");
        int8_t c = cc.partition.cls[(size_t)v];
        if (c < 0)
            throw InvalidParams("core_factor: U must lie inside the component cover");
        classes[c].push_back(v);
        in_u[(size_t)v] = 1;
    }
    if (classes[0].size() != classes[1].size() ||
        classes[1].size() != classes[2].size()) {
        res.fail = CoreFactorFail::ClassSizes;
        return res;
    }

    for (int v : u)
        for (int nb : h.neighbors(v))
            if (nb > v && in_u[(size_t)nb] &&
                cc.partition.cls[(size_t)v] == cc.partition.cls[(size_t)nb]) {
                res.fail = CoreFactorFail::NotAColoring;
                return res;
            }

    const int k = (int)classes[0].size();
    auto [w_ab, w_bc] = tripartite_weights(h, classes[0], classes[1], classes[2]);
    MatchResult m_ab = bottleneck_matching(w_ab);
    MatchResult m_bc = bottleneck_matching(w_bc);
    res.quality_ab = m_ab.objective;
    res.quality_bc = m_bc.objective;
    Rat threshold = Rat(1) - Rat(6) * epsilon;
    if (m_ab.objective < threshold || m_bc.objective < threshold) {
        res.fail = CoreFactorFail::MatchingQuality;
        return res;
    }

    // Triples indexed by middle-class position: b's partners under the two
    // matchings give (a, b, c), the three copies of one recovered factor vertex.
    std::vector<int> a_of_b((size_t)k, -1);
    for (int a = 0; a < k; ++a) a_of_b[(size_t)m_ab.pairing[(size_t)a]] = a;
    std::vector<std::array<int, 3>> triples((size_t)k);
    for (int b = 0; b < k; ++b)
        triples[(size_t)b] = {classes[0][(size_t)a_of_b[(size_t)b]],
                              classes[1][(size_t)b],
                              classes[2][(size_t)m_bc.pairing[(size_t)b]]};

    std::vector<std::pair<int, int>> factor_edges;
    std::vector<std::pair<int, int>> product_edges;
    for (int b1 = 0; b1 < k; ++b1)
        for (int b2 = b1 + 1; b2 < k; ++b2) {
            bool linked = false;
            for (int x : triples[(size_t)b1])
                for (int y : triples[(size_t)b2])
                    if (h.has_edge(x, y)) linked = true;
            if (!linked) continue;
            factor_edges.emplace_back(b1, b2);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i == j) continue; // same class, never a product edge
                    int x = triples[(size_t)b1][(size_t)i];
                    int y = triples[(size_t)b2][(size_t)j];
                    product_edges.emplace_back(std::min(x, y), std::max(x, y));
                }
        }

    std::vector<std::pair<int, int>> internal;
    for (int v : u)
        for (int nb : h.neighbors(v))
            if (nb > v && in_u[(size_t)nb]) internal.emplace_back(v, nb);

    EdgeSet h_tilde = EdgeSet::from_pairs(product_edges);
    EdgeSet h_internal = EdgeSet::from_pairs(internal);
    res.delta = symmetric_difference(h_internal, h_tilde);

    long long vol = 0;
    for (int v : u) vol += h.degree(v);
    long long basis = use_internal_edge_bound ? (long long)h_internal.size() : vol;
    Rat bound = Rat(260) * epsilon * Rat(basis) + Rat((long long)u.size());
    if (Rat(res.delta) > bound) {
        res.fail = CoreFactorFail::ErrorBound;
        return res;
    }

    ComponentFactorization f;
    f.vertices.assign(u.begin(), u.end());
    f.color_map.resize(u.size());
    f.g_map.assign(u.size(), -1);
    auto pos = [&](int v) {
        return (size_t)(std::lower_bound(f.vertices.begin(), f.vertices.end(), v) -
                        f.vertices.begin());
    };
    for (size_t i = 0; i < u.size(); ++i)
        f.color_map[i] = cc.partition.cls[(size_t)u[i]];
    for (int b = 0; b < k; ++b)
        for (int x : triples[(size_t)b]) f.g_map[pos(x)] = b;
    f.g_tilde = Graph::from_edges(k, factor_edges);
    f.h_tilde = std::move(h_tilde);
    res.factorization = std::move(f);
    return res;
}

} // namespace tc
