#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tensorcolor/errors.hpp"
#include "tensorcolor/instance.hpp"
#include "tensorcolor/matching.hpp"
#include "tensorcolor/oracles.hpp"
#include "tensorcolor/rng.hpp"

using namespace tc;

namespace {

Rat min_along(const WeightedBipartite& w, const std::vector<int>& pairing) {
    Rat best(1);
    bool first = true;
    for (int i = 0; i < w.k_left; ++i) {
        Rat x = w.at(i, pairing[(size_t)i]);
        if (first || x < best) best = x;
        first = false;
    }
    return best;
}

} // namespace

TEST_CASE("zero matrix construction") {
    auto w = WeightedBipartite::zeros(2, 3);
    CHECK(w.k_left == 2);
    CHECK(w.k_right == 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(w.at(i, j) == Rat(0));
    CHECK_THROWS_AS(WeightedBipartite::zeros(-1, 2), InvalidParams);
}

TEST_CASE("trivial sizes") {
    auto empty = WeightedBipartite::zeros(0, 0);
    auto r = bottleneck_matching(empty);
    CHECK(r.pairing.empty());
    CHECK(r.objective == Rat(1));

    auto one = WeightedBipartite::zeros(1, 1);
    one.at(0, 0) = Rat(5, 7);
    auto r1 = bottleneck_matching(one);
    CHECK(r1.pairing == std::vector<int>{0});
    CHECK(r1.objective == Rat(5, 7));

    CHECK_THROWS_AS(bottleneck_matching(WeightedBipartite::zeros(2, 3)),
                    InvalidParams);
}

TEST_CASE("two by two keeps the strong diagonal") {
    auto w = WeightedBipartite::zeros(2, 2);
    w.at(0, 0) = Rat(9, 10);
    w.at(0, 1) = Rat(2, 10);
    w.at(1, 0) = Rat(3, 10);
    w.at(1, 1) = Rat(8, 10);
    auto r = bottleneck_matching(w);
    CHECK(r.objective == Rat(4, 5));
    CHECK(r.pairing == std::vector<int>{0, 1});

    // flipped layout forces the anti-diagonal
    auto f = WeightedBipartite::zeros(2, 2);
    f.at(0, 0) = Rat(1, 10);
    f.at(0, 1) = Rat(9, 10);
    f.at(1, 0) = Rat(8, 10);
    f.at(1, 1) = Rat(1, 10);
    auto rf = bottleneck_matching(f);
    CHECK(rf.objective == Rat(4, 5));
    CHECK(rf.pairing == std::vector<int>{1, 0});
}

TEST_CASE("constant matrices take the identity pairing") {
    auto w = WeightedBipartite::zeros(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w.at(i, j) = Rat(1, 2);
    auto r = bottleneck_matching(w);
    CHECK(r.objective == Rat(1, 2));
    CHECK(r.pairing == std::vector<int>{0, 1, 2});
}

TEST_CASE("three by three band matrix") {
    auto w = WeightedBipartite::zeros(3, 3);
    Rat big(1), small(1, 10);
    int strong[3][3] = {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w.at(i, j) = strong[i][j] ? big : small;
    auto r = bottleneck_matching(w);
    CHECK(r.objective == Rat(1));
    CHECK(r.pairing == std::vector<int>{0, 1, 2});
}

TEST_CASE("objective always equals the realized minimum") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + (int)rng.uniform(4); // 2..5
        auto w = WeightedBipartite::zeros(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                w.at(i, j) = Rat((long long)rng.uniform(10), 10);
        auto fast = bottleneck_matching(w);
        CHECK(min_along(w, fast.pairing) == fast.objective);
        auto slow = brute_force_bottleneck(w);
        CHECK(fast.objective == slow.objective);
    }
}

TEST_CASE("class weight matrices on the exact nine-vertex tensor") {
    Graph h = tensor_with_k3(k3());
    std::vector<int> a{0, 1, 2}, b{3, 4, 5}, c{6, 7, 8};
    auto [w1, w2] = tripartite_weights(h, a, b, c);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat want = i == j ? Rat(1) : Rat(1, 2);
            CHECK(w1.at(i, j) == want);
            CHECK(w2.at(i, j) == want);
        }
    auto r = bottleneck_matching(w1);
    CHECK(r.objective == Rat(1));
    CHECK(r.pairing == std::vector<int>{0, 1, 2});

    std::vector<int> shorter{0, 1};
    CHECK_THROWS_AS(tripartite_weights(h, shorter, b, c), InvalidParams);

    // all-isolated classes produce all-zero weights
    Graph iso(3);
    std::vector<int> x{0}, y{1}, z{2};
    auto [z1, z2] = tripartite_weights(iso, x, y, z);
    CHECK(z1.at(0, 0) == Rat(0));
    CHECK(z2.at(0, 0) == Rat(0));
    CHECK(bottleneck_matching(z1).objective == Rat(0));
}
