#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tensorcolor/graph.hpp"

using namespace tc;

namespace {

Graph path4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}
Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("from_edges sorts, dedupes, rejects loops") {
    Graph g = Graph::from_edges(4, {{2, 0}, {0, 2}, {3, 1}, {1, 3}, {0, 1}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidParams);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), InvalidParams);
}

TEST_CASE("tensor product size, degrees, adjacency rule") {
    Graph k3 = complete(3);
    Graph t = tensor_product(k3, k3);
    CHECK(t.n() == 9);
    CHECK(t.m() == 2 * k3.m() * k3.m()); // 18
    // (f,g) ~ (f',g') iff f != f' and g != g' here
    for (int f = 0; f < 3; ++f)
        for (int g = 0; g < 3; ++g)
            for (int f2 = 0; f2 < 3; ++f2)
                for (int g2 = 0; g2 < 3; ++g2) {
                    bool want = f != f2 && g != g2;
                    if (f == f2 && g == g2) continue;
                    CHECK(t.has_edge(f * 3 + g, f2 * 3 + g2) == want);
                }
    // degree multiplies
    Graph p = path4();
    Graph tp = tensor_product(k3, p);
    for (int f = 0; f < 3; ++f)
        for (int g = 0; g < 4; ++g)
            CHECK(tp.degree(f * 4 + g) == k3.degree(f) * p.degree(g));
}

TEST_CASE("intersection sizes with coincident arguments") {
    Graph g = Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {3, 4}});
    CHECK(intersection_size(g, 0, 1) == 2); // {2, 3}
    CHECK(intersection_size(g, 0, 0) == 2); // degree
    CHECK(intersection_size(g, 2, 3) == 2); // {0, 1}
    CHECK(triple_intersection_size(g, 0, 1, 4) == 1); // {3}
    CHECK(triple_intersection_size(g, 0, 0, 1) == 2);
}

TEST_CASE("volume and cut") {
    Graph c5 = cycle(5);
    std::vector<int> s{0, 1};
    CHECK(volume(c5, s) == 4);
    CHECK(cut_size(c5, s) == 2);
    std::vector<int> t{0, 2};
    CHECK(cut_size(c5, t) == 4);
    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(cut_size(c5, all) == 0);
    CHECK(volume(c5, all) == 10);
}

TEST_CASE("symmetric difference of edge sets") {
    EdgeSet a = EdgeSet::from_pairs({{0, 1}, {1, 2}, {2, 3}});
    EdgeSet b = EdgeSet::from_pairs({{1, 2}, {3, 2}, {0, 3}});
    CHECK(symmetric_difference(a, b) == 2); // {0,1} and {0,3}
    CHECK(symmetric_difference(a, a) == 0);
    CHECK(symmetric_difference(a, EdgeSet{}) == 3);
}

TEST_CASE("edge expansion, exhaustively checked") {
    Graph c5 = cycle(5);
    // worst cut: two adjacent vertices, 2 crossing edges over volume 4
    CHECK(is_alpha_edge_expander(c5, Rat(1, 2)));
    CHECK_FALSE(is_alpha_edge_expander(c5, Rat(51, 100)));
    Graph k4 = complete(4);
    CHECK(is_alpha_edge_expander(k4, Rat(2, 3)));
    CHECK_FALSE(is_alpha_edge_expander(k4, Rat(67, 100)));
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_alpha_edge_expander(two, Rat(1, 100)));
    CHECK_THROWS_AS(is_alpha_edge_expander(complete(3), Rat(1, 2), 2),
                    SizeCapExceeded);
}

TEST_CASE("small-set expansion only constrains small sets") {
    Graph c5 = cycle(5);
    // delta = 1/5 leaves only singletons, each with cut = vol
    CHECK(is_small_set_expander(c5, Rat(1, 5), Rat(1)));
    CHECK_FALSE(is_small_set_expander(c5, Rat(1, 5), Rat(101, 100)));
    // delta = 2/5 brings in pairs: adjacent pair has cut 2, vol 4
    CHECK(is_small_set_expander(c5, Rat(2, 5), Rat(1, 2)));
    CHECK_FALSE(is_small_set_expander(c5, Rat(2, 5), Rat(3, 4)));
}

TEST_CASE("spectral lower bound approximates known graphs") {
    // K4 normalized adjacency has second eigenvalue -1/3, so the Cheeger
    // bound (1 - lambda2) / 2 equals 2/3 -- matching K4's true conductance.
    CHECK(spectral_expansion_lower_bound(complete(4)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(spectral_expansion_lower_bound(two) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("dimacs round trip") {
    Graph g = Graph::from_edges(5, {{0, 4}, {1, 2}, {0, 1}});
    std::stringstream ss;
    write_dimacs(ss, g);
    std::string text = ss.str();
    CHECK(text.find("p edge 5 3") != std::string::npos);
    std::stringstream in(text);
    Graph back = read_dimacs(in);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());

    std::stringstream bad("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad), InvalidParams);
}

TEST_CASE("dimacs file round trip") {
    Graph g = cycle(7);
    std::string path = "test_graph_roundtrip.col";
    write_dimacs_file(path, g);
    Graph back = read_dimacs_file(path);
    CHECK(back.edges() == g.edges());
    std::remove(path.c_str());
}

TEST_CASE("adjacency bitsets agree with has_edge") {
    Graph g = Graph::from_edges(70, {{0, 1}, {0, 69}, {5, 64}, {63, 64}, {1, 2}});
    AdjacencyBits bits = adjacency_bits(g);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            CHECK(bits.test(u, v) == g.has_edge(u, v));
        }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path4()));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("proper 3-coloring check") {
    Graph c5 = cycle(5);
    Coloring3 good{0, 1, 0, 1, 2};
    CHECK(is_proper_3coloring(c5, good));
    Coloring3 bad{0, 1, 0, 1, 0}; // edge (4,0) monochromatic
    CHECK_FALSE(is_proper_3coloring(c5, bad));
    Coloring3 wrong_size{0, 1};
    CHECK_FALSE(is_proper_3coloring(c5, wrong_size));
    Coloring3 out_of_range{0, 1, 0, 1, 3};
    CHECK_FALSE(is_proper_3coloring(c5, out_of_range));
}
