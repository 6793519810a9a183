#include "tensorcolor/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tensorcolor/errors.hpp"

namespace tc {

namespace {

void check_epsilon(const Rat& epsilon) {
    if (epsilon < Rat(0) || !(epsilon < Rat(1, 40)))
        throw InvalidParams("epsilon must lie in [0, 1/40)");
}

struct Structures {
    CandidateGraph cg;
    TriangleSystem sys;
    TriangleComponents comps;
};

Structures build_structures(const Graph& h, const Rat& epsilon,
                            const PipelineCaps& caps) {
    CandidateGraph cg = build_candidate_graph(h, epsilon);
    auto tris = enumerate_triangles(cg.edges, caps.triangle_cap);
    TriangleSystem sys(h, cg.edges, std::move(tris));
    TriangleComponents comps = triangle_components(sys);
    return Structures{std::move(cg), std::move(sys), std::move(comps)};
}

} // namespace

Reconstruction main_reconstruct(const Graph& h, const Rat& epsilon,
                                const PipelineCaps& caps) {
    check_epsilon(epsilon);
    if (h.n() == 0) throw InvalidParams("reconstruction needs a nonempty graph");
    Structures st = build_structures(h, epsilon, caps);

    Reconstruction rec;
    rec.epsilon = epsilon;
    rec.stats.n_triangles = (long long)st.sys.triangles().size();
    rec.stats.n_components = (long long)st.comps.components.size();

    std::vector<int> order((size_t)st.comps.components.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = st.comps.components[(size_t)a];
        const auto& cb = st.comps.components[(size_t)b];
        if (ca.covered.size() != cb.covered.size())
            return ca.covered.size() > cb.covered.size();
        return ca.triangle_ids.front() < cb.triangle_ids.front();
    });

    std::vector<char> uncovered((size_t)h.n(), 1);
    long long vol_rest = 0;
    for (int v = 0; v < h.n(); ++v) vol_rest += h.degree(v);
    long long n_uncovered = h.n();

    for (int idx : order) {
        const auto& comp = st.comps.components[(size_t)idx];
        if (3 * (long long)comp.triangle_ids.size() != (long long)comp.covered.size()) {
            ++rec.stats.n_skipped_overlap;
            continue;
        }
        std::vector<int> u;
        for (int v : comp.covered)
            if (uncovered[(size_t)v]) u.push_back(v);
        if (u.empty()) continue;

        CoreFactorResult cf = core_factor(st.sys, comp, u, epsilon);
        if (cf.fail != CoreFactorFail::None) {
            ++rec.stats.n_rejected_factor;
            continue;
        }

        std::vector<char> in_u((size_t)h.n(), 0);
        long long vol_u = 0;
        for (int v : u) {
            in_u[(size_t)v] = 1;
            vol_u += h.degree(v);
        }
        long long cut = 0;
        for (int v : u)
            for (int nb : h.neighbors(v))
                if (uncovered[(size_t)nb] && !in_u[(size_t)nb]) ++cut;
        Rat limit = Rat(5) * epsilon / (Rat(1) - epsilon) *
                    Rat(std::min(vol_u, vol_rest - vol_u));
        if (Rat(cut) > limit) {
            ++rec.stats.n_rejected_cut;
            continue;
        }

        std::vector<int> rest;
        for (int v = 0; v < h.n(); ++v)
            if (uncovered[(size_t)v] && !in_u[(size_t)v]) rest.push_back(v);
        if (!is_atomic(st.cg, u) || !is_atomic(st.cg, rest))
            throw std::logic_error("accepted component split a candidate component");

        for (int v : u) uncovered[(size_t)v] = 0;
        vol_rest -= vol_u;
        n_uncovered -= (long long)u.size();
        rec.components.push_back(std::move(cf.factorization));
        ++rec.stats.n_accepted;
    }

    if (n_uncovered > 0)
        throw IncompleteCover("reconstruction left " + std::to_string(n_uncovered) +
                                  " vertices uncovered",
                              n_uncovered);

    // Disjoint union of the factors, local ids offset in acceptance order.
    std::vector<std::pair<int, int>> g_edges;
    std::vector<std::pair<int, int>> h_edges;
    int offset = 0;
    for (const auto& f : rec.components) {
        for (auto [a, b] : f.g_tilde.edges()) g_edges.emplace_back(a + offset, b + offset);
        offset += f.g_tilde.n();
        for (auto e : f.h_tilde.e) h_edges.push_back(e);
    }
    rec.g_tilde = Graph::from_edges(offset, g_edges);
    rec.h_tilde = EdgeSet::from_pairs(h_edges);
    rec.error_delta = symmetric_difference(EdgeSet::from_graph(h), rec.h_tilde);
    return rec;
}

std::optional<Coloring3> full_3_coloring(const Graph& h, const Rat& epsilon,
                                         const PipelineCaps& caps) {
    check_epsilon(epsilon);
    if (h.n() == 0) return Coloring3{};
    Structures st = build_structures(h, epsilon, caps);
    for (const auto& comp : st.comps.components) {
        if ((int)comp.covered.size() != h.n()) continue;
        auto cc = color_component(st.sys, comp);
        if (!cc.ok) continue;
        Coloring3 colors(cc.partition.cls.begin(), cc.partition.cls.end());
        if (is_proper_3coloring(h, colors)) return colors;
    }
    return std::nullopt;
}

namespace {

struct CompColoring {
    bool usable = false;
    std::vector<int8_t> cls; // per H-vertex, -1 outside the component
};

struct KSearch {
    const Graph& h;
    const TriangleSystem& sys;
    const std::vector<TriangleComponentInfo>& comps;
    int k;
    std::vector<std::optional<CompColoring>> memo;
    std::vector<long long> suffix_cover;
    std::vector<char> used;
    std::vector<int> chosen;
    long long covered = 0;
    Coloring3 result;

    KSearch(const Graph& h_, const TriangleSystem& sys_,
            const std::vector<TriangleComponentInfo>& comps_, int k_)
        : h(h_), sys(sys_), comps(comps_), k(k_),
          memo(comps_.size()), used((size_t)h_.n(), 0) {
        suffix_cover.assign(comps.size() + 1, 0);
        for (int i = (int)comps.size() - 1; i >= 0; --i)
            suffix_cover[(size_t)i] =
                suffix_cover[(size_t)i + 1] + (long long)comps[(size_t)i].covered.size();
    }

    const CompColoring& coloring_of(int i) {
        if (!memo[(size_t)i]) {
            CompColoring cc;
            auto res = color_component(sys, comps[(size_t)i]);
            if (res.ok) {
                cc.cls = std::move(res.partition.cls);
                cc.usable = true;
                // Classes must properly color the edges inside the cover; a
                // color permutation can never repair a monochromatic edge.
                for (int v : comps[(size_t)i].covered) {
                    for (int nb : h.neighbors(v))
                        if (nb > v && cc.cls[(size_t)nb] >= 0 &&
                            cc.cls[(size_t)v] == cc.cls[(size_t)nb])
                            cc.usable = false;
                    if (!cc.usable) break;
                }
            }
            memo[(size_t)i] = std::move(cc);
        }
        return *memo[(size_t)i];
    }

    bool dfs(int i) {
        if (covered == h.n()) return assemble();
        if (i >= (int)comps.size() || (int)chosen.size() >= k) return false;
        if (covered + suffix_cover[(size_t)i] < h.n()) return false;

        const auto& comp = comps[(size_t)i];
        bool disjoint = true;
        for (int v : comp.covered)
            if (used[(size_t)v]) {
                disjoint = false;
                break;
            }
        if (disjoint && coloring_of(i).usable) {
            for (int v : comp.covered) used[(size_t)v] = 1;
            covered += (long long)comp.covered.size();
            chosen.push_back(i);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
            covered -= (long long)comp.covered.size();
            for (int v : comp.covered) used[(size_t)v] = 0;
        }
        return dfs(i + 1);
    }

    // All vertices covered by the disjoint chosen components: search the six
    // class-to-color assignments per component, checking cross-component
    // edges as soon as both endpoints' components are assigned.
    bool assemble() {
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int cnt = (int)chosen.size();
        std::vector<int> comp_of((size_t)h.n(), -1);
        std::vector<int8_t> lcls((size_t)h.n(), -1);
        for (int t = 0; t < cnt; ++t) {
            const auto& cc = coloring_of(chosen[(size_t)t]);
            for (int v : comps[(size_t)chosen[(size_t)t]].covered) {
                comp_of[(size_t)v] = t;
                lcls[(size_t)v] = cc.cls[(size_t)v];
            }
        }
        // Cross edges bucketed by unordered component pair.
        std::map<std::pair<int, int>, std::vector<std::pair<int8_t, int8_t>>> cross;
        for (auto [x, y] : h.edges()) {
            int cx = comp_of[(size_t)x], cy = comp_of[(size_t)y];
            if (cx == cy) continue;
            if (cx > cy) {
                std::swap(cx, cy);
                std::swap(x, y);
            }
            cross[{cx, cy}].emplace_back(lcls[(size_t)x], lcls[(size_t)y]);
        }

        std::vector<int> perm_of((size_t)cnt, -1);
        std::function<bool(int)> pick = [&](int t) -> bool {
            if (t == cnt) return true;
            for (int p = 0; p < 6; ++p) {
                perm_of[(size_t)t] = p;
                bool ok = true;
                for (int s = 0; s < t && ok; ++s) {
                    auto it = cross.find({s, t});
                    if (it == cross.end()) continue;
                    for (auto [ls, lt] : it->second)
                        if (perms[perm_of[(size_t)s]][ls] == perms[p][lt]) {
                            ok = false;
                            break;
                        }
                }
                if (ok && pick(t + 1)) return true;
            }
            perm_of[(size_t)t] = -1;
            return false;
        };
        if (!pick(0)) return false;

        result.assign((size_t)h.n(), 0);
        for (int v = 0; v < h.n(); ++v)
            result[(size_t)v] =
                (int8_t)perms[perm_of[(size_t)comp_of[(size_t)v]]][lcls[(size_t)v]];
        return true;
    }
};

} // namespace

std::optional<Coloring3> color_with_k_core_components(const Graph& h,
                                                      const Rat& epsilon, int k,
                                                      const PipelineCaps& caps) {
    check_epsilon(epsilon);
    if (k < 0) throw InvalidParams("k must be non-negative");
    if (h.m() == 0) return Coloring3((size_t)h.n(), 0);
    if (k == 0) return std::nullopt;

    Structures st = build_structures(h, epsilon, caps);
    KSearch search(h, st.sys, st.comps.components, k);
    if (search.dfs(0)) {
        if (!is_proper_3coloring(h, search.result))
            throw std::logic_error("assembled coloring is not proper");
        return search.result;
    }
    return std::nullopt;
}

EpsilonSearchResult epsilon_search(const Graph& h, const PipelineCaps& caps) {
    const int t_min = 6, t_max = 30;
    long long m = h.m();
    std::map<int, std::optional<Reconstruction>> memo;

    auto attempt = [&](int t) -> const std::optional<Reconstruction>& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        Rat eps(1, 1LL << t);
        std::optional<Reconstruction> out;
        try {
            Reconstruction rec = main_reconstruct(h, eps, caps);
            if (Rat(rec.error_delta) <= Rat(550) * eps * Rat(m)) out = std::move(rec);
        } catch (const IncompleteCover&) {
        }
        return memo.emplace(t, std::move(out)).first->second;
    };

    if (!attempt(t_min))
        throw NotNearTensor("no workable noise rate on the search grid");
    int lo = t_min, hi = t_max;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (attempt(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    EpsilonSearchResult out;
    out.epsilon = Rat(1, 1LL << lo);
    out.reconstruction = *memo[lo];
    return out;
}

} // namespace tc
