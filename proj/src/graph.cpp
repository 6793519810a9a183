#include "tensorcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tensorcolor/errors.hpp"

namespace tc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidParams("negative vertex count");
    Graph g(n);
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidParams("edge endpoint out of range");
        if (u == v) throw InvalidParams("self-loop rejected");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        g.adj_[(size_t)u].push_back(v);
        g.adj_[(size_t)v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.edge_count_ = (long long)norm.size();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n() || v < 0 || v >= n() || u == v) return false;
    const auto& a = adj_[(size_t)u];
    const auto& b = adj_[(size_t)v];
    const auto& small = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(small.begin(), small.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve((size_t)edge_count_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[(size_t)u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

EdgeSet EdgeSet::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    EdgeSet s;
    s.e.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v) throw InvalidParams("self-loop in edge set");
        s.e.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(s.e.begin(), s.e.end());
    s.e.erase(std::unique(s.e.begin(), s.e.end()), s.e.end());
    return s;
}

EdgeSet EdgeSet::from_graph(const Graph& g) {
    EdgeSet s;
    s.e = g.edges();
    return s;
}

bool EdgeSet::contains(int u, int v) const {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(e.begin(), e.end(), key);
}

Graph tensor_product(const Graph& f, const Graph& g) {
    long long nf = f.n(), ng = g.n();
    if (nf * ng > (1LL << 30))
        throw InvalidParams("tensor product too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)(2 * f.m() * g.m()));
    for (int a = 0; a < f.n(); ++a)
        for (int b : f.neighbors(a)) {
            if (b < a) continue; // each F-edge once
            for (int x = 0; x < g.n(); ++x)
                for (int y : g.neighbors(x)) {
                    if (y < x) continue; // each G-edge once
                    edges.emplace_back((int)(a * ng + x), (int)(b * ng + y));
                    edges.emplace_back((int)(a * ng + y), (int)(b * ng + x));
                }
        }
    return Graph::from_edges((int)(nf * ng), edges);
}

long long intersection_size(const Graph& x, int u, int v) {
    if (u < 0 || u >= x.n() || v < 0 || v >= x.n())
        throw InvalidParams("vertex out of range");
    if (u == v) return x.degree(u);
    const auto& a = x.neighbors(u);
    const auto& b = x.neighbors(v);
    long long count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

long long triple_intersection_size(const Graph& x, int u, int v, int w) {
    for (int y : {u, v, w})
        if (y < 0 || y >= x.n()) throw InvalidParams("vertex out of range");
    // Coincident arguments collapse to the smaller intersection.
    if (u == v) return intersection_size(x, u, w);
    if (u == w || v == w) return intersection_size(x, u, v);
    const auto& a = x.neighbors(u);
    const auto& b = x.neighbors(v);
    const auto& c = x.neighbors(w);
    long long count = 0;
    size_t i = 0, j = 0, k = 0;
    while (i < a.size() && j < b.size() && k < c.size()) {
        int m = std::max({a[i], b[j], c[k]});
        if (a[i] < m) { ++i; continue; }
        if (b[j] < m) { ++j; continue; }
        if (c[k] < m) { ++k; continue; }
        ++count; ++i; ++j; ++k;
    }
    return count;
}

long long volume(const Graph& x, std::span<const int> s) {
    long long vol = 0;
    for (int v : s) {
        if (v < 0 || v >= x.n()) throw InvalidParams("vertex out of range");
        vol += x.degree(v);
    }
    return vol;
}

long long cut_size(const Graph& x, std::span<const int> s) {
    std::vector<char> in(x.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= x.n()) throw InvalidParams("vertex out of range");
        in[(size_t)v] = 1;
    }
    long long cut = 0;
    for (int v : s)
        for (int u : x.neighbors(v))
            if (!in[(size_t)u]) ++cut;
    return cut;
}

long long symmetric_difference(const EdgeSet& e1, const EdgeSet& e2) {
    size_t i = 0, j = 0;
    long long count = 0;
    while (i < e1.e.size() && j < e2.e.size()) {
        if (e1.e[i] < e2.e[j]) { ++count; ++i; }
        else if (e2.e[j] < e1.e[i]) { ++count; ++j; }
        else { ++i; ++j; }
    }
    count += (long long)(e1.e.size() - i) + (long long)(e2.e.size() - j);
    return count;
}

namespace {

std::vector<uint64_t> subset_masks(const Graph& g) {
    std::vector<uint64_t> mask((size_t)g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) mask[(size_t)v] |= 1ULL << u;
    return mask;
}

} // namespace

bool is_alpha_edge_expander(const Graph& g, const Rat& alpha, int size_cap) {
    int n = g.n();
    if (n > size_cap)
        throw SizeCapExceeded("exhaustive expander check capped at " +
                              std::to_string(size_cap) + " vertices, got " +
                              std::to_string(n));
    if (n <= 1) return true;
    auto mask = subset_masks(g);
    long long total_vol = 2 * g.m();
    uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (uint64_t s = 1; s < full; ++s) {
        long long vol_s = 0, cut = 0;
        uint64_t rest = full & ~s;
        for (uint64_t bits = s; bits; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            vol_s += g.degree(v);
            cut += std::popcount(mask[(size_t)v] & rest);
        }
        long long smaller = std::min(vol_s, total_vol - vol_s);
        if (Rat(cut) < alpha * Rat(smaller)) return false;
    }
    return true;
}

bool is_small_set_expander(const Graph& g, const Rat& delta, const Rat& alpha,
                           int size_cap) {
    int n = g.n();
    if (n > size_cap)
        throw SizeCapExceeded("exhaustive small-set check capped at " +
                              std::to_string(size_cap) + " vertices, got " +
                              std::to_string(n));
    if (n == 0) return true;
    auto mask = subset_masks(g);
    uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (uint64_t s = 1; s <= full; ++s) {
        int size = std::popcount(s);
        if (Rat(size) > delta * Rat(n)) continue;
        long long vol_s = 0, cut = 0;
        uint64_t rest = full & ~s;
        for (uint64_t bits = s; bits; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            vol_s += g.degree(v);
            cut += std::popcount(mask[(size_t)v] & rest);
        }
        if (Rat(cut) < alpha * Rat(vol_s)) return false;
    }
    return true;
}

double spectral_expansion_lower_bound(const Graph& g) {
    int n = g.n();
    if (n <= 1 || g.m() == 0) return 0.0;
    // Lazy walk matrix M = (I + D^{-1/2} A D^{-1/2}) / 2 on non-isolated
    // vertices; top eigenvector is proportional to sqrt(deg).
    std::vector<double> sqrt_deg((size_t)n, 0.0);
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
        sqrt_deg[(size_t)v] = std::sqrt((double)g.degree(v));
        norm += (double)g.degree(v);
    }
    norm = std::sqrt(norm);
    std::vector<double> top((size_t)n);
    for (int v = 0; v < n; ++v) top[(size_t)v] = sqrt_deg[(size_t)v] / norm;

    std::vector<double> x((size_t)n), next((size_t)n);
    for (int v = 0; v < n; ++v)
        x[(size_t)v] = 1.0 / (double)(v + 1); // fixed deterministic start
    auto deflate = [&](std::vector<double>& vec) {
        double dot = 0.0;
        for (int v = 0; v < n; ++v) dot += vec[(size_t)v] * top[(size_t)v];
        for (int v = 0; v < n; ++v) vec[(size_t)v] -= dot * top[(size_t)v];
    };
    auto renorm = [&](std::vector<double>& vec) {
        double len = 0.0;
        for (double t : vec) len += t * t;
        len = std::sqrt(len);
        if (len < 1e-300) return false;
        for (double& t : vec) t /= len;
        return true;
    };
    deflate(x);
    if (!renorm(x)) return 0.0;

    double prev_eig = 2.0;
    for (int iter = 0; iter < 100000; ++iter) {
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            if (g.degree(v) > 0) {
                for (int u : g.neighbors(v))
                    if (g.degree(u) > 0)
                        acc += x[(size_t)u] / (sqrt_deg[(size_t)v] * sqrt_deg[(size_t)u]);
            }
            next[(size_t)v] = 0.5 * (x[(size_t)v] + acc);
        }
        deflate(next);
        double eig = 0.0;
        for (int v = 0; v < n; ++v) eig += next[(size_t)v] * x[(size_t)v];
        if (!renorm(next)) return 0.5; // deflated space collapsed: lambda2 ~ -inf
        x.swap(next);
        if (std::abs(eig - prev_eig) < 1e-9) {
            double lambda2 = 2.0 * eig - 1.0; // undo the lazy transform
            return std::max(0.0, (1.0 - lambda2) / 2.0);
        }
        prev_eig = eig;
    }
    double lambda2 = 2.0 * prev_eig - 1.0;
    return std::max(0.0, (1.0 - lambda2) / 2.0);
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    long long declared_m = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'c') continue;
        if (kind == 'p') {
            std::string fmt;
            ls >> fmt >> n >> declared_m;
            if (!ls || fmt != "edge" || n < 0)
                throw InvalidParams("bad DIMACS problem line: " + line);
        } else if (kind == 'e') {
            int u, v;
            ls >> u >> v;
            if (!ls || n < 0)
                throw InvalidParams("bad DIMACS edge line: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InvalidParams("unknown DIMACS line: " + line);
        }
    }
    if (n < 0) throw InvalidParams("DIMACS input without problem line");
    Graph g = Graph::from_edges(n, edges);
    if (declared_m >= 0 && declared_m != g.m())
        throw InvalidParams("DIMACS edge count mismatch");
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InvalidParams("cannot open " + path);
    write_dimacs(out, g);
}

AdjacencyBits adjacency_bits(const Graph& g) {
    AdjacencyBits b;
    b.n = g.n();
    b.words = (g.n() + 63) / 64;
    b.bits.assign((size_t)b.n * b.words, 0);
    for (int v = 0; v < g.n(); ++v) {
        uint64_t* row = b.bits.data() + (size_t)v * b.words;
        for (int u : g.neighbors(v)) row[u >> 6] |= 1ULL << (u & 63);
    }
    return b;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen((size_t)g.n(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[(size_t)u]) {
                seen[(size_t)u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n();
}

bool is_proper_3coloring(const Graph& g, std::span<const int8_t> colors) {
    if ((int)colors.size() != g.n()) return false;
    for (int8_t c : colors)
        if (c < 0 || c > 2) return false;
    for (auto [u, v] : g.edges())
        if (colors[(size_t)u] == colors[(size_t)v]) return false;
    return true;
}

} // namespace tc
