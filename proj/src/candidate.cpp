#include "tensorcolor/candidate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tensorcolor/errors.hpp"
#include "tensorcolor/oracles.hpp"

namespace tc {

namespace {

// Union-find with path halving.
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[(size_t)x] != x) {
            parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
            x = parent[(size_t)x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[(size_t)b] = a;
    }
};

template <typename Fn>
void for_each_bit(const uint64_t* row, int words, Fn&& fn) {
    for (int w = 0; w < words; ++w) {
        uint64_t bits = row[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            fn(w * 64 + b);
        }
    }
}

} // namespace

bool epsilon_similar_degree(const Graph& h, int u, int v, const Rat& epsilon) {
    long long du = h.degree(u);
    long long dv = h.degree(v);
    long long dmax = std::max(du, dv);
    long long dmin = std::min(du, dv);
    // dmax - dmin <= 2*eps*dmax
    return Rat(dmax - dmin) <= Rat(2) * epsilon * Rat(dmax);
}

bool is_candidate_edge(const Graph& h, int u, int v, const Rat& epsilon) {
    if (u == v) return false;
    if (!epsilon_similar_degree(h, u, v, epsilon)) return false;
    long long dmax = std::max(h.degree(u), h.degree(v));
    if (dmax == 0) return false;
    long long common = intersection_size(h, u, v);
    // (1-6e) * dmax / 2 <= common  and  common <= dmax / (2 * (1-e))
    if ((Rat(1) - Rat(6) * epsilon) * Rat(dmax) > Rat(2 * common)) return false;
    if (Rat(2 * common) * (Rat(1) - epsilon) > Rat(dmax)) return false;
    return true;
}

CandidateGraph build_candidate_graph(const Graph& h, const Rat& epsilon) {
    const int n = h.n();
    AdjacencyBits bits = adjacency_bits(h);
    const int words = bits.words;

    // Degree-similarity and both window checks reduce to integer comparisons
    // once cross-multiplied; do that once per pair on top of a bitset popcount.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        long long du = h.degree(u);
        const uint64_t* ru = bits.row(u);
        for (int v = u + 1; v < n; ++v) {
            long long dv = h.degree(v);
            long long dmax = std::max(du, dv);
            if (dmax == 0) continue;
            if (Rat(dmax - std::min(du, dv)) > Rat(2) * epsilon * Rat(dmax)) continue;
            const uint64_t* rv = bits.row(v);
            long long common = 0;
            for (int w = 0; w < words; ++w) common += std::popcount(ru[w] & rv[w]);
            if ((Rat(1) - Rat(6) * epsilon) * Rat(dmax) > Rat(2 * common)) continue;
            if (Rat(2 * common) * (Rat(1) - epsilon) > Rat(dmax)) continue;
            edges.emplace_back(u, v);
        }
    }

    CandidateGraph cg;
    cg.edges = Graph::from_edges(n, edges);
    cg.epsilon = epsilon;

    Dsu dsu(n);
    for (auto [u, v] : edges) dsu.unite(u, v);
    cg.component_of.assign((size_t)n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (cg.component_of[(size_t)r] == -1) cg.component_of[(size_t)r] = next++;
        cg.component_of[(size_t)v] = cg.component_of[(size_t)r];
    }
    cg.n_components = next;
    return cg;
}

bool is_atomic(const CandidateGraph& c, std::span<const int> s) {
    const int n = c.edges.n();
    std::vector<long long> size((size_t)c.n_components, 0);
    std::vector<long long> hit((size_t)c.n_components, 0);
    for (int v = 0; v < n; ++v) ++size[(size_t)c.component_of[(size_t)v]];
    for (int v : s) {
        if (v < 0 || v >= n) throw InvalidParams("is_atomic: vertex out of range");
        ++hit[(size_t)c.component_of[(size_t)v]];
    }
    for (int i = 0; i < c.n_components; ++i)
        if (hit[(size_t)i] != 0 && hit[(size_t)i] != size[(size_t)i]) return false;
    return true;
}

std::vector<Triangle> enumerate_triangles(const Graph& c, long long cap) {
    std::vector<Triangle> out;
    for (int u = 0; u < c.n(); ++u) {
        auto nu = c.neighbors(u);
        for (int v : nu) {
            if (v <= u) continue;
            auto nv = c.neighbors(v);
            // merge walk over the two sorted lists, keeping w > v
            size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j])
                    ++i;
                else if (nv[j] < nu[i])
                    ++j;
                else {
                    int w = nu[i];
                    if (w > v) {
                        if (cap > 0 && (long long)out.size() >= cap)
                            throw CapExceeded("triangle cap exceeded");
                        out.push_back(Triangle{{u, v, w}});
                    }
                    ++i;
                    ++j;
                }
            }
        }
    }
    return out;
}

std::optional<std::array<int, 3>> compatible(const Graph& h, const Triangle& t1,
                                             const Triangle& t2) {
    for (int x : t1.v)
        for (int y : t2.v)
            if (x == y) return std::nullopt;
    int cross = 0;
    for (int x : t1.v)
        for (int y : t2.v)
            if (h.has_edge(x, y)) ++cross;
    if (cross < 6) return std::nullopt;

    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j)
                if (h.has_edge(t1.v[(size_t)i], t2.v[(size_t)p[j]]) != (i != j))
                    ok = false;
        if (ok)
            return std::array<int, 3>{t2.v[(size_t)p[0]], t2.v[(size_t)p[1]],
                                      t2.v[(size_t)p[2]]};
    }
    return std::nullopt;
}

TriangleSystem::TriangleSystem(Graph h, Graph c, std::vector<Triangle> triangles)
    : h_(std::move(h)), c_(std::move(c)), tris_(std::move(triangles)) {
    if (h_.n() != c_.n())
        throw InvalidParams("TriangleSystem: graphs must share a vertex set");
    std::sort(tris_.begin(), tris_.end());
    h_bits_ = adjacency_bits(h_);
    c_bits_ = adjacency_bits(c_);
}

int TriangleSystem::triangle_id(const Triangle& t) const {
    auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
    if (it == tris_.end() || !(*it == t)) return -1;
    return (int)(it - tris_.begin());
}

void TriangleSystem::for_each_compatible(
    int id, const std::function<void(int, const std::array<int, 3>&)>& fn) const {
    if (id < 0 || id >= (int)tris_.size())
        throw InvalidParams("for_each_compatible: bad triangle id");
    const auto& t = tris_[(size_t)id].v;
    const int words = h_bits_.words;

    // a[i] holds the vertices adjacent to both of t \ {t[i]} and not to t[i];
    // a compatible partner meets each a[i] in exactly one vertex, so walking
    // a[0] x a[1] x a[2] (filtered to candidate-graph triangles) lists every
    // neighbor exactly once, already aligned.
    std::vector<uint64_t> a[3];
    for (int i = 0; i < 3; ++i) {
        a[i].resize((size_t)words);
        const uint64_t* p = h_bits_.row(t[(size_t)(i + 1) % 3]);
        const uint64_t* q = h_bits_.row(t[(size_t)(i + 2) % 3]);
        const uint64_t* r = h_bits_.row(t[(size_t)i]);
        for (int w = 0; w < words; ++w) a[i][(size_t)w] = (p[w] & q[w]) & ~r[w];
        for (int x : t) a[i][(size_t)(x >> 6)] &= ~(1ULL << (x & 63));
    }

    std::vector<uint64_t> b2((size_t)words), b3((size_t)words);
    for_each_bit(a[0].data(), words, [&](int v1) {
        const uint64_t* c1 = c_bits_.row(v1);
        for (int w = 0; w < words; ++w) b2[(size_t)w] = a[1][(size_t)w] & c1[w];
        for_each_bit(b2.data(), words, [&](int v2) {
            const uint64_t* c2 = c_bits_.row(v2);
            for (int w = 0; w < words; ++w)
                b3[(size_t)w] = a[2][(size_t)w] & c1[w] & c2[w];
            for_each_bit(b3.data(), words, [&](int v3) {
                std::array<int, 3> s{v1, v2, v3};
                std::array<int, 3> sorted = s;
                std::sort(sorted.begin(), sorted.end());
                int other = triangle_id(Triangle{sorted});
                if (other >= 0) fn(other, s);
            });
        });
    });
}

std::vector<int> TriangleSystem::compatible_ids(int id) const {
    std::vector<int> out;
    for_each_compatible(id, [&](int other, const std::array<int, 3>&) {
        out.push_back(other);
    });
    std::sort(out.begin(), out.end());
    return out;
}

TriangleComponents triangle_components(const TriangleSystem& sys) {
    const auto& tris = sys.triangles();
    const int m = (int)tris.size();
    Dsu dsu(m);
    for (int id = 0; id < m; ++id)
        sys.for_each_compatible(id, [&](int other, const std::array<int, 3>&) {
            if (other > id) dsu.unite(id, other);
        });

    TriangleComponents out;
    out.triangles = tris;
    out.component_of.assign((size_t)m, -1);
    std::vector<int> root_to_comp((size_t)m, -1);
    int next = 0;
    for (int id = 0; id < m; ++id) {
        int r = dsu.find(id);
        if (root_to_comp[(size_t)r] == -1) {
            root_to_comp[(size_t)r] = next++;
            out.components.emplace_back();
        }
        int comp = root_to_comp[(size_t)r];
        out.component_of[(size_t)id] = comp;
        out.components[(size_t)comp].triangle_ids.push_back(id);
    }
    for (auto& info : out.components) {
        for (int id : info.triangle_ids)
            for (int v : tris[(size_t)id].v) info.covered.push_back(v);
        std::sort(info.covered.begin(), info.covered.end());
        info.covered.erase(std::unique(info.covered.begin(), info.covered.end()),
                           info.covered.end());
    }
    return out;
}

TriangleClass classify_triangle_ground_truth(const LabeledInstance& inst,
                                             const Triangle& t) {
    if (!inst.has_ground_truth)
        throw InvalidParams("classification needs ground-truth labels");
    VertexLabel l[3];
    for (int i = 0; i < 3; ++i) {
        int v = t.v[(size_t)i];
        if (v < 0 || v >= (int)inst.labels.size())
            throw InvalidParams("triangle vertex out of range");
        l[i] = inst.labels[(size_t)v];
    }
    const bool all_colors_distinct =
        l[0].color != l[1].color && l[0].color != l[2].color && l[1].color != l[2].color;
    const bool all_colors_equal = l[0].color == l[1].color && l[1].color == l[2].color;

    if (all_colors_distinct) {
        if (l[0].g == l[1].g && l[1].g == l[2].g) return TriangleClass::Core;
        bool conf = confusable(inst.g, l[0].g, l[1].g, inst.epsilon) &&
                    confusable(inst.g, l[0].g, l[2].g, inst.epsilon) &&
                    confusable(inst.g, l[1].g, l[2].g, inst.epsilon);
        return conf ? TriangleClass::QuasiCore : TriangleClass::Other;
    }
    if (all_colors_equal) {
        long long d1 = 0;
        for (int v : t.v) d1 = std::max(d1, (long long)inst.h.degree(v));
        Rat lo = (Rat(1) - Rat(8) * inst.epsilon) * Rat(d1);
        Rat hi = (Rat(1) + Rat(9) * inst.epsilon) * Rat(d1);
        static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& p : pairs) {
            long long common =
                intersection_size(inst.g, l[p[0]].g, l[p[1]].g);
            Rat val = Rat(4 * common);
            if (val < lo || val > hi) return TriangleClass::Other;
        }
        return TriangleClass::Monochrome;
    }
    return TriangleClass::Other;
}

} // namespace tc
