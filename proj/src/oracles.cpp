#include "tensorcolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tensorcolor/errors.hpp"

namespace tc {

namespace {

struct ColorSearch {
    const Graph& g;
    std::vector<uint8_t> allowed; // 3-bit palette mask per vertex
    Coloring3 colors;             // -1 when unset
    std::vector<int> trail;       // vertices whose masks were narrowed, for undo

    explicit ColorSearch(const Graph& graph)
        : g(graph),
          allowed((size_t)graph.n(), 0b111),
          colors((size_t)graph.n(), -1) {}

    // Narrow v to exactly color c, push consequences; false on wipeout.
    bool assign(int v, int c) {
        size_t mark = trail.size();
        if (!set_mask(v, (uint8_t)(1u << c))) {
            undo(mark);
            return false;
        }
        return true;
    }

    bool set_mask(int v, uint8_t mask) {
        mask &= allowed[(size_t)v];
        if (mask == 0) return false;
        if (mask == allowed[(size_t)v]) return true;
        allowed[(size_t)v] = mask;
        trail.push_back(v);
        if (std::popcount((unsigned)mask) == 1) {
            int c = std::countr_zero((unsigned)mask);
            colors[(size_t)v] = (int8_t)c;
            for (int u : g.neighbors(v))
                if (!set_mask(u, (uint8_t)(0b111u & ~(1u << c)))) return false;
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            allowed[(size_t)v] = 0; // recomputed below
            colors[(size_t)v] = -1;
        }
        // Masks are easier to rebuild than to checkpoint: a narrowed vertex's
        // old mask is whatever its already-fixed neighbors still permit.
        for (size_t i = 0; i < allowed.size(); ++i)
            if (allowed[i] == 0) allowed[i] = rebuild_mask((int)i);
    }

    uint8_t rebuild_mask(int v) {
        uint8_t mask = 0b111;
        for (int u : g.neighbors(v))
            if (colors[(size_t)u] >= 0) mask &= (uint8_t)~(1u << colors[(size_t)u]);
        return mask;
    }

    bool solve() {
        int best = -1, best_options = 4;
        for (int v = 0; v < g.n(); ++v) {
            if (colors[(size_t)v] >= 0) continue;
            int options = std::popcount((unsigned)allowed[(size_t)v]);
            if (options < best_options ||
                (options == best_options && better_tiebreak(v, best))) {
                best = v;
                best_options = options;
            }
        }
        if (best == -1) return true;
        for (int c = 0; c < 3; ++c) {
            if (!(allowed[(size_t)best] & (1u << c))) continue;
            size_t mark = trail.size();
            if (assign(best, c) && solve()) return true;
            undo(mark);
        }
        return false;
    }

    bool better_tiebreak(int v, int best) const {
        if (best == -1) return true;
        if (g.degree(v) != g.degree(best)) return g.degree(v) > g.degree(best);
        return v < best;
    }
};

} // namespace

std::optional<Coloring3> brute_force_3coloring(const Graph& g, int size_cap) {
    if (g.n() > size_cap)
        throw SizeCapExceeded("3-coloring oracle vertex cap exceeded");
    if (g.n() == 0) return Coloring3{};

    ColorSearch search(g);

    // Color permutations act freely, so one vertex (and, when present, one of
    // its neighbors) can be pinned without losing solutions.
    int v0 = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(v0)) v0 = v;
    if (!search.assign(v0, 0)) return std::nullopt;
    if (g.degree(v0) > 0) {
        int u0 = -1;
        for (int u : g.neighbors(v0))
            if (search.colors[(size_t)u] < 0 && (u0 == -1 || g.degree(u) > g.degree(u0)))
                u0 = u;
        if (u0 != -1 && !search.assign(u0, 1)) return std::nullopt;
    }
    if (!search.solve()) return std::nullopt;
    return search.colors;
}

MatchResult brute_force_bottleneck(const WeightedBipartite& w) {
    if (w.k_left != w.k_right)
        throw InvalidParams("bottleneck oracle needs a square matrix");
    const int k = w.k_left;
    if (k > 8) throw SizeCapExceeded("bottleneck oracle limited to k <= 8");
    if (k == 0) return MatchResult{{}, Rat(1)};

    std::vector<int> perm((size_t)k);
    std::iota(perm.begin(), perm.end(), 0);
    MatchResult best{{}, Rat(0)};
    bool have = false;
    do {
        Rat low = w.at(0, perm[0]);
        for (int i = 1; i < k; ++i) low = std::min(low, w.at(i, perm[(size_t)i]));
        if (!have || best.objective < low) {
            best.objective = low;
            best.pairing = perm;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long long disjunction(const Graph& g, int g1, int g2, int g3) {
    std::vector<char> in_union((size_t)g.n(), 0);
    std::vector<uint8_t> hits((size_t)g.n(), 0);
    int idx = 0;
    for (int v : {g1, g2, g3}) {
        for (int u : g.neighbors(v)) {
            in_union[(size_t)u] = 1;
            hits[(size_t)u] |= (uint8_t)(1u << idx);
        }
        ++idx;
    }
    long long count = 0;
    for (int u = 0; u < g.n(); ++u)
        if (in_union[(size_t)u] && hits[(size_t)u] != 0b111) ++count;
    return count;
}

bool confusable(const Graph& g, int g1, int g2, const Rat& epsilon) {
    long long common = intersection_size(g, g1, g2);
    long long dmax = std::max(g.degree(g1), g.degree(g2));
    // strict: common > (1 - 9e) * dmax
    return Rat(common) > (Rat(1) - Rat(9) * epsilon) * Rat(dmax);
}

} // namespace tc
