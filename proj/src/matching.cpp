#include "tensorcolor/matching.hpp"

#include <algorithm>
#include <functional>

#include "tensorcolor/errors.hpp"

namespace tc {

WeightedBipartite WeightedBipartite::zeros(int k_left, int k_right) {
    if (k_left < 0 || k_right < 0)
        throw InvalidParams("weight matrix dimensions must be non-negative");
    WeightedBipartite w;
    w.k_left = k_left;
    w.k_right = k_right;
    w.w.assign((size_t)k_left * (size_t)k_right, Rat(0));
    return w;
}

namespace {

// Augmenting-path perfect-matching test on the subgraph of pairs with weight
// >= threshold.  Left vertices are processed ascending and each path scan
// visits right vertices ascending, which pins down the returned pairing.
bool feasible(const WeightedBipartite& w, const Rat& threshold,
              std::vector<int>& pairing) {
    const int k = w.k_left;
    std::vector<int> match_right((size_t)k, -1); // right -> left
    std::vector<char> visited((size_t)k, 0);

    std::function<bool(int)> augment = [&](int left) -> bool {
        // Take the first untaken right vertex before displacing an existing
        // match; ties then resolve to the earliest stable pairing instead of
        // depending on the displacement cascade.
        for (int right = 0; right < k; ++right) {
            if (visited[(size_t)right] || w.at(left, right) < threshold) continue;
            if (match_right[(size_t)right] == -1) {
                visited[(size_t)right] = 1;
                match_right[(size_t)right] = left;
                return true;
            }
        }
        for (int right = 0; right < k; ++right) {
            if (visited[(size_t)right] || w.at(left, right) < threshold) continue;
            visited[(size_t)right] = 1;
            if (augment(match_right[(size_t)right])) {
                match_right[(size_t)right] = left;
                return true;
            }
        }
        return false;
    };

    for (int left = 0; left < k; ++left) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(left)) return false;
    }
    pairing.assign((size_t)k, -1);
    for (int right = 0; right < k; ++right) pairing[(size_t)match_right[(size_t)right]] = right;
    return true;
}

} // namespace

MatchResult bottleneck_matching(const WeightedBipartite& w) {
    if (w.k_left != w.k_right)
        throw InvalidParams("bottleneck matching needs a square matrix");
    const int k = w.k_left;
    if (k == 0) return MatchResult{{}, Rat(1)};

    std::vector<Rat> levels = w.w;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // At the minimum weight every pair qualifies, so feasibility holds at the
    // low end and is monotone decreasing in the threshold; binary search for
    // the highest feasible level.
    std::vector<int> pairing;
    size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
        size_t mid = lo + (hi - lo + 1) / 2;
        std::vector<int> tmp;
        if (feasible(w, levels[mid], tmp))
            lo = mid;
        else
            hi = mid - 1;
    }
    if (!feasible(w, levels[lo], pairing))
        throw std::logic_error("bottleneck matching: feasibility not monotone");
    if (lo + 1 < levels.size()) {
        std::vector<int> tmp;
        if (feasible(w, levels[lo + 1], tmp))
            throw std::logic_error("bottleneck matching: feasibility not monotone");
    }

    Rat objective = levels[lo];
    return MatchResult{std::move(pairing), objective};
}

std::pair<WeightedBipartite, WeightedBipartite> tripartite_weights(
    const Graph& h, std::span<const int> a, std::span<const int> b,
    std::span<const int> c) {
    if (a.size() != b.size() || b.size() != c.size())
        throw InvalidParams("tripartite weights need equal class sizes");
    const int k = (int)a.size();
    auto weight = [&](int x, int y) {
        long long dmax = std::max(h.degree(x), h.degree(y));
        if (dmax == 0) return Rat(0);
        return Rat(2 * intersection_size(h, x, y), dmax);
    };
    auto w1 = WeightedBipartite::zeros(k, k);
    auto w2 = WeightedBipartite::zeros(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            w1.at(i, j) = weight(a[(size_t)i], b[(size_t)j]);
            w2.at(i, j) = weight(b[(size_t)i], c[(size_t)j]);
        }
    return {std::move(w1), std::move(w2)};
}

} // namespace tc
