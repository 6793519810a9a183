#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tensorcolor/errors.hpp"
#include "tensorcolor/hardness.hpp"
#include "tensorcolor/oracles.hpp"

using namespace tc;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph single_edge() { return Graph::from_edges(2, {{0, 1}}); }

// n = 2, one equality constraint, no coloring constraints.
EqualityInstance eq_pair() {
    EqualityInstance inst;
    inst.n = 2;
    inst.n_base = 2;
    inst.eq = EdgeSet::from_pairs({{0, 1}});
    inst.owner = {0, 1};
    return inst;
}

} // namespace

TEST_CASE("plain instances copy the graph as coloring constraints") {
    EqualityInstance inst = plain_equality_instance(cycle(5));
    CHECK(inst.n == 5);
    CHECK(inst.n_base == 5);
    CHECK(inst.neq.size() == 5);
    CHECK(inst.eq.size() == 0);
    CHECK(inst.owner == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("cloud padding sizes and ownership") {
    // degree 2, epsilon 1/15: ceil(2 * 15) = 30 cloud vertices per original
    EqualityInstance inst = make_equality_instance(cycle(5), Rat(1, 15));
    CHECK(inst.n == 155);
    CHECK(inst.n_base == 5);
    CHECK(inst.neq.size() == 5);
    CHECK(inst.eq.size() == 150);
    CHECK(inst.owner[4] == 4);
    CHECK(inst.owner[5] == 0);
    CHECK(inst.owner[34] == 0);
    CHECK(inst.owner[35] == 1);
    CHECK(inst.owner[154] == 4);
    for (auto [u, v] : inst.eq.e) CHECK(inst.owner[(size_t)v] == u);

    // epsilon 1 keeps exactly deg(v) clouds
    CHECK(make_equality_instance(cycle(5), Rat(1)).n == 15);

    CHECK_THROWS_AS(make_equality_instance(cycle(5), Rat(0)), InvalidParams);
    CHECK_THROWS_AS(make_equality_instance(cycle(5), Rat(3, 2)), InvalidParams);
    CHECK_THROWS_AS(make_equality_instance(cycle(5), Rat(-1, 5)), InvalidParams);
}

TEST_CASE("looseness thresholds are exact") {
    EqualityInstance plain = plain_equality_instance(cycle(5));
    CHECK(is_epsilon_loose(plain, Rat(1)));
    CHECK_FALSE(is_epsilon_loose(plain, Rat(1, 2)));

    // padded: 2 coloring constraints out of 32 per original, so the exact
    // threshold is 1/16; clouds themselves are always loose
    EqualityInstance pad = make_equality_instance(cycle(5), Rat(1, 15));
    CHECK(is_epsilon_loose(pad, Rat(1, 15)));
    CHECK(is_epsilon_loose(pad, Rat(1, 16)));
    CHECK_FALSE(is_epsilon_loose(pad, Rat(1, 17)));
}

TEST_CASE("assignment checking honors both constraint kinds") {
    EqualityInstance plain = plain_equality_instance(cycle(5));
    std::vector<int> good{0, 1, 0, 1, 2};
    CHECK(satisfies(plain, good));
    std::vector<int> wrap{0, 1, 0, 1, 0};   // edge {4,0} monochromatic
    CHECK_FALSE(satisfies(plain, wrap));
    std::vector<int> palette{0, 1, 0, 1, 3};
    CHECK_FALSE(satisfies(plain, palette));
    std::vector<int> short_one{0, 1, 0, 1};
    CHECK_FALSE(satisfies(plain, short_one));

    EqualityInstance pad = make_equality_instance(cycle(5), Rat(1, 15));
    std::vector<int> ext((size_t)pad.n);
    for (int v = 0; v < pad.n; ++v) ext[(size_t)v] = good[(size_t)pad.owner[(size_t)v]];
    CHECK(satisfies(pad, ext));
    ext[10] = (ext[10] + 1) % 3; // cloud of vertex 0 breaks its equality
    CHECK_FALSE(satisfies(pad, ext));
}

TEST_CASE("hard graph sizes: one cube per vertex plus constraint junctions") {
    // per cube 108 edges; 66 across a coloring constraint; 216 across equality
    ReducedGraph c5 = tensor_reduction(plain_equality_instance(cycle(5)));
    CHECK(c5.graph.n() == 135);
    CHECK(c5.graph.m() == 5 * 108 + 5 * 66);

    ReducedGraph k2 = tensor_reduction(plain_equality_instance(single_edge()));
    CHECK(k2.graph.n() == 54);
    CHECK(k2.graph.m() == 2 * 108 + 66);

    ReducedGraph eq = tensor_reduction(eq_pair());
    CHECK(eq.graph.n() == 54);
    CHECK(eq.graph.m() == 2 * 108 + 216);
}

TEST_CASE("hard graph adjacency rules, spot-checked") {
    // tuple codes: (a,b,c) -> 9a+3b+c
    ReducedGraph k2 = tensor_reduction(plain_equality_instance(single_edge()));
    // inside a cube: (0,0,0)-(1,1,1) yes, (0,0,0)-(0,1,1) no
    CHECK(k2.graph.has_edge(0, 13));
    CHECK_FALSE(k2.graph.has_edge(0, 4));
    // across a coloring constraint: identical distinct-digit tuples link,
    // identical constant tuples do not, and (0,1,2)-(1,2,0) collides at x1=y3
    CHECK(k2.graph.has_edge(5, 27 + 5));
    CHECK_FALSE(k2.graph.has_edge(0, 27 + 0));
    CHECK_FALSE(k2.graph.has_edge(5, 27 + 15));
    // degrees: 8 inside the cube plus 8 (constant tuple) or 1 (rainbow tuple)
    CHECK(k2.graph.degree(0) == 16);
    CHECK(k2.graph.degree(5) == 9);

    // across an equality constraint the cube rule repeats
    ReducedGraph eq = tensor_reduction(eq_pair());
    CHECK(eq.graph.has_edge(0, 27 + 13));
    CHECK_FALSE(eq.graph.has_edge(0, 27 + 4));
    CHECK_FALSE(eq.graph.has_edge(0, 27 + 0));

    EqualityInstance big;
    big.n = 621379; // 27 cubes over the vertex cap
    CHECK_THROWS_AS(tensor_reduction(big), SizeCapExceeded);
    EqualityInstance none;
    CHECK_THROWS_AS(tensor_reduction(none), InvalidParams);
}

TEST_CASE("factor witness for a satisfied plain instance") {
    ReducedGraph rg = tensor_reduction(plain_equality_instance(cycle(5)));
    std::vector<int> psi{0, 1, 0, 1, 2};
    CompletenessFactor cf = completeness_factor(rg, psi);

    // pair graph: 18 edges inside each block, 81 across each constraint
    CHECK(cf.g_prime.n() == 45);
    CHECK(cf.g_prime.m() == 5 * 18 + 5 * 81);

    // pi is a bijection onto the hard graph's vertices
    REQUIRE(cf.pi.size() == 135);
    std::vector<int> image = cf.pi;
    std::sort(image.begin(), image.end());
    std::vector<int> all(135);
    std::iota(all.begin(), all.end(), 0);
    CHECK(image == all);
    // color 2 inserted at position psi[0]=0 before pair digits (1,2)
    CHECK(cf.pi[2 * 45 + 5] == 9 * 2 + 3 * 1 + 2);

    std::vector<int> bad{0, 1, 0, 1, 0};
    CHECK_THROWS_AS(completeness_factor(rg, bad), UnsatisfiedAssignment);
}

TEST_CASE("missing-edge fractions, global and per vertex") {
    // Plain instances leave most cross-constraint product edges unrealized:
    // per constraint 486 directed slots, 66 present.  Padding with equality
    // clouds (whose product edges all exist) dilutes this below any target.
    ReducedGraph plain = tensor_reduction(plain_equality_instance(cycle(5)));
    std::vector<int> psi{0, 1, 0, 1, 2};
    CompletenessFactor pf = completeness_factor(plain, psi);
    CHECK(missing_fraction(plain, pf) == Rat(70, 99));
    CHECK(worst_vertex_missing_fraction(plain, pf) == Rat(17, 22));

    EqualityInstance pad = make_equality_instance(cycle(5), Rat(1, 15));
    ReducedGraph rg = tensor_reduction(pad);
    std::vector<int> ext((size_t)pad.n);
    for (int v = 0; v < pad.n; ++v) ext[(size_t)v] = psi[(size_t)pad.owner[(size_t)v]];
    CompletenessFactor cf = completeness_factor(rg, ext);
    CHECK(missing_fraction(rg, cf) == Rat(70, 1719));
    CHECK(worst_vertex_missing_fraction(rg, cf) == Rat(17, 142));
    CHECK(worst_vertex_missing_fraction(rg, cf) < Rat(1, 5));
}

TEST_CASE("dictator decoding on triangle tensor powers") {
    std::vector<int8_t> line{0, 1, 2};
    auto d1 = decode_dictator(1, line);
    REQUIRE(d1.has_value());
    CHECK(d1->first == 0);
    CHECK(d1->second == std::array<int, 3>{0, 1, 2});

    // second coordinate through the swap (0 1)
    std::vector<int8_t> second{1, 0, 2, 1, 0, 2, 1, 0, 2};
    auto d2 = decode_dictator(2, second);
    REQUIRE(d2.has_value());
    CHECK(d2->first == 1);
    CHECK(d2->second == std::array<int, 3>{1, 0, 2});

    // first coordinate, identity
    std::vector<int8_t> first{0, 0, 0, 1, 1, 1, 2, 2, 2};
    auto d3 = decode_dictator(2, first);
    REQUIRE(d3.has_value());
    CHECK(d3->first == 0);
    CHECK(d3->second == std::array<int, 3>{0, 1, 2});

    std::vector<int8_t> flat(9, 0);
    CHECK_THROWS_AS(decode_dictator(2, flat), NotAProperColoring);
    std::vector<int8_t> loud{0, 1, 3};
    CHECK_THROWS_AS(decode_dictator(1, loud), NotAProperColoring);
    CHECK_THROWS_AS(decode_dictator(0, line), InvalidParams);
    CHECK_THROWS_AS(decode_dictator(9, line), InvalidParams);
    CHECK_THROWS_AS(decode_dictator(2, line), InvalidParams);
}

TEST_CASE("reading an assignment off a coloring of the hard graph") {
    ReducedGraph rg = tensor_reduction(plain_equality_instance(cycle(5)));
    std::vector<int> psi{0, 1, 0, 1, 2};

    // the canonical coloring reads each cube's digit at psi(v)
    std::vector<int8_t> canonical((size_t)rg.graph.n());
    for (int v = 0; v < 5; ++v)
        for (int x = 0; x < 27; ++x) {
            int digit = psi[(size_t)v] == 0   ? x / 9
                        : psi[(size_t)v] == 1 ? (x / 3) % 3
                                              : x % 3;
            canonical[(size_t)(v * 27 + x)] = (int8_t)digit;
        }
    REQUIRE(is_proper_3coloring(rg.graph, canonical));
    auto back = soundness_extract(rg, canonical);
    REQUIRE(back.has_value());
    CHECK(*back == psi);

    // any coloring the exhaustive search finds decodes to a valid assignment
    auto found = brute_force_3coloring(rg.graph);
    REQUIRE(found.has_value());
    auto phi = soundness_extract(rg, *found);
    REQUIRE(phi.has_value());
    CHECK(satisfies(rg.base, *phi));

    std::vector<int8_t> zeros((size_t)rg.graph.n(), 0);
    CHECK_THROWS_AS(soundness_extract(rg, zeros), NotAProperColoring);
}
