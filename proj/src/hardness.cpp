#include "tensorcolor/hardness.hpp"

#include <algorithm>
#include <numeric>

#include "tensorcolor/errors.hpp"

namespace tc {

namespace {

std::array<int, 3> trits(int code) {
    return {code / 9, (code / 3) % 3, code % 3};
}

bool all_coords_differ(int x, int y) {
    auto a = trits(x), b = trits(y);
    return a[0] != b[0] && a[1] != b[1] && a[2] != b[2];
}

// The asymmetric rule for neq pairs: x_i != y_j for every i != j.
bool off_diagonal_differ(int x, int y) {
    auto a = trits(x), b = trits(y);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && a[(size_t)i] == b[(size_t)j]) return false;
    return true;
}

} // namespace

EqualityInstance plain_equality_instance(const Graph& g) {
    EqualityInstance inst;
    inst.n = g.n();
    inst.n_base = g.n();
    inst.neq = EdgeSet::from_graph(g);
    inst.owner.resize((size_t)g.n());
    std::iota(inst.owner.begin(), inst.owner.end(), 0);
    return inst;
}

EqualityInstance make_equality_instance(const Graph& g, const Rat& epsilon) {
    if (!(epsilon > Rat(0)) || epsilon > Rat(1))
        throw InvalidParams("cloud padding needs epsilon in (0, 1]");
    EqualityInstance inst = plain_equality_instance(g);
    std::vector<std::pair<int, int>> eq;
    int next = g.n();
    for (int v = 0; v < g.n(); ++v) {
        // ceil(deg / epsilon) cloud vertices, eq-tied to v
        long long cloud = (g.degree(v) * epsilon.den + epsilon.num - 1) / epsilon.num;
        for (long long i = 0; i < cloud; ++i) {
            eq.emplace_back(v, next);
            inst.owner.push_back(v);
            ++next;
        }
    }
    inst.n = next;
    inst.eq = EdgeSet::from_pairs(eq);
    return inst;
}

bool is_epsilon_loose(const EqualityInstance& inst, const Rat& epsilon) {
    std::vector<long long> neq_deg((size_t)inst.n, 0), total((size_t)inst.n, 0);
    for (auto [u, v] : inst.neq.e) {
        ++neq_deg[(size_t)u];
        ++neq_deg[(size_t)v];
        ++total[(size_t)u];
        ++total[(size_t)v];
    }
    for (auto [u, v] : inst.eq.e) {
        ++total[(size_t)u];
        ++total[(size_t)v];
    }
    for (int v = 0; v < inst.n; ++v)
        if (Rat(neq_deg[(size_t)v]) > epsilon * Rat(total[(size_t)v])) return false;
    return true;
}

bool satisfies(const EqualityInstance& inst, std::span<const int> assignment) {
    if ((int)assignment.size() != inst.n) return false;
    for (int a : assignment)
        if (a < 0 || a > 2) return false;
    for (auto [u, v] : inst.neq.e)
        if (assignment[(size_t)u] == assignment[(size_t)v]) return false;
    for (auto [u, v] : inst.eq.e)
        if (assignment[(size_t)u] != assignment[(size_t)v]) return false;
    return true;
}

ReducedGraph tensor_reduction(const EqualityInstance& inst) {
    if (inst.n <= 0) throw InvalidParams("reduction needs at least one vertex");
    if ((long long)inst.n * 27 > (1LL << 24))
        throw SizeCapExceeded("reduced graph too large");

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < inst.n; ++v) {
        int base = v * 27;
        for (int x = 0; x < 27; ++x)
            for (int y = x + 1; y < 27; ++y)
                if (all_coords_differ(x, y)) edges.emplace_back(base + x, base + y);
    }
    for (auto [u, v] : inst.eq.e)
        for (int x = 0; x < 27; ++x)
            for (int y = 0; y < 27; ++y)
                if (all_coords_differ(x, y)) edges.emplace_back(u * 27 + x, v * 27 + y);
    for (auto [u, v] : inst.neq.e)
        for (int x = 0; x < 27; ++x)
            for (int y = 0; y < 27; ++y)
                if (off_diagonal_differ(x, y)) edges.emplace_back(u * 27 + x, v * 27 + y);

    ReducedGraph rg;
    rg.base = inst;
    rg.graph = Graph::from_edges(inst.n * 27, edges);
    return rg;
}

CompletenessFactor completeness_factor(const ReducedGraph& rg,
                                       std::span<const int> assignment) {
    const EqualityInstance& inst = rg.base;
    if (!satisfies(inst, assignment))
        throw UnsatisfiedAssignment("assignment must satisfy the instance");

    const int np = inst.n * 9; // (v, y) at v*9 + 3*y1 + y2
    std::vector<std::pair<int, int>> edges;
    auto pair_trits = [](int code) { return std::array<int, 2>{code / 3, code % 3}; };
    auto both_differ = [&](int x, int y) {
        auto a = pair_trits(x), b = pair_trits(y);
        return a[0] != b[0] && a[1] != b[1];
    };
    for (int v = 0; v < inst.n; ++v)
        for (int x = 0; x < 9; ++x)
            for (int y = x + 1; y < 9; ++y)
                if (both_differ(x, y)) edges.emplace_back(v * 9 + x, v * 9 + y);
    for (auto [u, v] : inst.eq.e)
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y)
                if (both_differ(x, y)) edges.emplace_back(u * 9 + x, v * 9 + y);
    for (auto [u, v] : inst.neq.e)
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) edges.emplace_back(u * 9 + x, v * 9 + y);

    CompletenessFactor cf;
    cf.g_prime = Graph::from_edges(np, edges);
    cf.pi.assign((size_t)np * 3, -1);
    for (int c = 0; c < 3; ++c)
        for (int v = 0; v < inst.n; ++v)
            for (int y = 0; y < 9; ++y) {
                int a = y / 3, b = y % 3;
                int pos = assignment[(size_t)v];
                std::array<int, 3> t{};
                if (pos == 0)
                    t = {c, a, b};
                else if (pos == 1)
                    t = {a, c, b};
                else
                    t = {a, b, c};
                cf.pi[(size_t)c * np + (size_t)(v * 9 + y)] =
                    v * 27 + 9 * t[0] + 3 * t[1] + t[2];
            }
    return cf;
}

Rat missing_fraction(const ReducedGraph& rg, const CompletenessFactor& cf) {
    const int np = cf.g_prime.n();
    long long total = 0, missing = 0;
    for (auto [p, q] : cf.g_prime.edges())
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2) {
                if (c1 == c2) continue;
                ++total;
                int x = cf.pi[(size_t)c1 * np + (size_t)p];
                int y = cf.pi[(size_t)c2 * np + (size_t)q];
                if (!rg.graph.has_edge(x, y)) ++missing;
            }
    if (total == 0) return Rat(0);
    return Rat(missing, total);
}

Rat worst_vertex_missing_fraction(const ReducedGraph& rg,
                                  const CompletenessFactor& cf) {
    const int np = cf.g_prime.n();
    std::vector<long long> deg((size_t)rg.graph.n(), 0), miss((size_t)rg.graph.n(), 0);
    for (auto [p, q] : cf.g_prime.edges())
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2) {
                if (c1 == c2) continue;
                int x = cf.pi[(size_t)c1 * np + (size_t)p];
                int y = cf.pi[(size_t)c2 * np + (size_t)q];
                ++deg[(size_t)x];
                ++deg[(size_t)y];
                if (!rg.graph.has_edge(x, y)) {
                    ++miss[(size_t)x];
                    ++miss[(size_t)y];
                }
            }
    Rat worst(0);
    for (int v = 0; v < rg.graph.n(); ++v)
        if (deg[(size_t)v] > 0) {
            Rat f(miss[(size_t)v], deg[(size_t)v]);
            if (f > worst) worst = f;
        }
    return worst;
}

std::optional<std::pair<int, std::array<int, 3>>> decode_dictator(
    int ell, std::span<const int8_t> coloring) {
    if (ell < 1 || ell > 8) throw InvalidParams("decode_dictator: ell out of range");
    long long n = 1;
    for (int i = 0; i < ell; ++i) n *= 3;
    if ((long long)coloring.size() != n)
        throw InvalidParams("decode_dictator: coloring size mismatch");
    for (int8_t c : coloring)
        if (c < 0 || c > 2) throw NotAProperColoring("colors must lie in {0,1,2}");

    // Neighbors of x: independently replace every digit with one of the two
    // other values.  Walking those suffices to check properness.
    std::vector<long long> pow((size_t)ell + 1, 1);
    for (int i = 1; i <= ell; ++i) pow[(size_t)i] = pow[(size_t)i - 1] * 3;
    auto digit = [&](long long x, int i) {
        return (int)((x / pow[(size_t)(ell - 1 - i)]) % 3);
    };
    for (long long x = 0; x < n; ++x) {
        long long deltas = 1;
        for (int i = 0; i < ell; ++i) deltas *= 2;
        for (long long mask = 0; mask < deltas; ++mask) {
            long long y = 0;
            long long m = mask;
            for (int i = 0; i < ell; ++i) {
                int d = digit(x, i);
                int shift = 1 + (int)(m % 2);
                m /= 2;
                y += (long long)((d + shift) % 3) * pow[(size_t)(ell - 1 - i)];
            }
            if (coloring[(size_t)x] == coloring[(size_t)y])
                throw NotAProperColoring("tensor power edge is monochromatic");
        }
    }

    for (int i = 0; i < ell; ++i) {
        std::array<int, 3> eta{};
        for (int t = 0; t < 3; ++t)
            eta[(size_t)t] = coloring[(size_t)(t * pow[(size_t)(ell - 1 - i)])];
        if (eta[0] == eta[1] || eta[0] == eta[2] || eta[1] == eta[2]) continue;
        bool ok = true;
        for (long long x = 0; x < n && ok; ++x)
            if (coloring[(size_t)x] != eta[(size_t)digit(x, i)]) ok = false;
        if (ok) return std::make_pair(i, eta);
    }
    return std::nullopt;
}

std::optional<std::vector<int>> soundness_extract(const ReducedGraph& rg,
                                                  std::span<const int8_t> coloring) {
    if (!is_proper_3coloring(rg.graph, coloring))
        throw NotAProperColoring("need a proper 3-coloring of the hard graph");
    std::vector<int> phi((size_t)rg.base.n, -1);
    std::vector<int8_t> cube(27);
    for (int v = 0; v < rg.base.n; ++v) {
        for (int x = 0; x < 27; ++x) cube[(size_t)x] = coloring[(size_t)(v * 27 + x)];
        auto dec = decode_dictator(3, cube);
        if (!dec) return std::nullopt;
        phi[(size_t)v] = dec->first;
    }
    if (!satisfies(rg.base, phi)) return std::nullopt;
    return phi;
}

} // namespace tc
