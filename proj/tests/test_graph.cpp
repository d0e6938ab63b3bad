#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "vtc/graph.hpp"
#include "vtc/hom_search.hpp"

using namespace vtc;

namespace {

// invariants every constructor and product must maintain
void check_graph_invariants(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        int prev = -1;
        for (int w : g.neighbors(v)) {
            CHECK(w >= 0);
            CHECK(w < n);
            CHECK(w != v);          // no self-loops
            CHECK(w > prev);        // sorted, no duplicates
            prev = w;
            CHECK(g.adjacent(v, w));
            CHECK(g.adjacent(w, v));  // symmetry
        }
    }
    if (n > 0) CHECK_FALSE(g.adjacent(0, 0));
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace

TEST_CASE("complete graph") {
    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK(Graph::complete(3).edge_count() == 3);
    CHECK(complement(Graph::complete(5)) == Graph::empty(5));
    check_graph_invariants(Graph::complete(6));
}

TEST_CASE("cycle graph") {
    Graph c4 = Graph::cycle(4);
    CHECK(c4.edge_count() == 4);
    CHECK(regular_valency(c4) == 2);
    CHECK(is_connected(c4));
    CHECK(is_bipartite(Graph::cycle(6)));
    CHECK_FALSE(is_bipartite(Graph::cycle(5)));
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    check_graph_invariants(Graph::cycle(5));
}

TEST_CASE("graph constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    // duplicate edges collapse
    CHECK(Graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
}

TEST_CASE("line graph") {
    SUBCASE("L(K_4) is 4-regular on 6 vertices") {
        auto lg = line_graph(Graph::complete(4));
        CHECK(lg.graph.vertex_count() == 6);
        CHECK(regular_valency(lg.graph) == 4);
        // brute-force the adjacency straight from edge incidence
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                auto [a, b] = lg.vertex_edge[i];
                auto [c, d] = lg.vertex_edge[j];
                bool incident = a == c || a == d || b == c || b == d;
                CHECK(lg.graph.adjacent(i, j) == incident);
            }
        // K_{2,2,2}: the complement is a perfect matching
        CHECK(regular_valency(complement(lg.graph)) == 1);
        check_graph_invariants(lg.graph);
    }
    SUBCASE("line graph of a cycle is the cycle") {
        auto lg = line_graph(Graph::cycle(5));
        CHECK(find_isomorphism(lg.graph, Graph::cycle(5)).status ==
              SearchStatus::found);
    }
    SUBCASE("L(K_6) is 8-regular on 15 vertices") {
        auto lg = line_graph(Graph::complete(6));
        CHECK(lg.graph.vertex_count() == 15);
        CHECK(regular_valency(lg.graph) == 2 * (2 * 3 - 2));
    }
    CHECK_THROWS_AS(line_graph(Graph::empty(3)), std::invalid_argument);
}

TEST_CASE("lexicographic product") {
    SUBCASE("X[K_1] is X") {
        Graph c5 = Graph::cycle(5);
        CHECK(lexicographic_product(c5, Graph::complete(1)) == c5);
    }
    SUBCASE("K_2[complement(K_2)] is C4") {
        Graph p = lexicographic_product(Graph::complete(2), Graph::empty(2));
        CHECK(find_isomorphism(p, Graph::cycle(4)).status == SearchStatus::found);
    }
    SUBCASE("C5[complement(K_2)] is 4-regular on 10 vertices") {
        Graph p = lexicographic_product(Graph::cycle(5), Graph::empty(2));
        CHECK(p.vertex_count() == 10);
        CHECK(regular_valency(p) == 4);
        check_graph_invariants(p);
    }
    SUBCASE("degree law: deg(x,y) = deg_X(x)*|V(Y)| + deg_Y(y)") {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 20; ++trial) {
            Graph x = random_graph(2 + trial % 4, 0.5, rng);
            Graph y = random_graph(1 + trial % 3, 0.4, rng);
            Graph p = lexicographic_product(x, y);
            check_graph_invariants(p);
            const int ny = y.vertex_count();
            for (int a = 0; a < x.vertex_count(); ++a)
                for (int i = 0; i < ny; ++i)
                    CHECK(p.degree(a * ny + i) ==
                          x.degree(a) * ny + y.degree(i));
        }
    }
}

TEST_CASE("multiple") {
    Graph c4 = Graph::cycle(4);
    CHECK(multiple(c4, 1) == c4);
    CHECK(multiple(c4, 2).vertex_count() == 8);
    CHECK(regular_valency(multiple(c4, 2)) == 4);
    CHECK(find_isomorphism(multiple(Graph::complete(2), 3),
                           Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                     {1, 5}, {2, 3}, {2, 4}, {2, 5}}))
              .status == SearchStatus::found);  // K_{3,3}
    CHECK_THROWS_AS(multiple(c4, 0), std::invalid_argument);
}

TEST_CASE("disjoint union and induced subgraphs") {
    Graph two_c5 = disjoint_union(Graph::cycle(5), Graph::cycle(5));
    CHECK(two_c5.vertex_count() == 10);
    CHECK_FALSE(is_connected(two_c5));
    check_graph_invariants(two_c5);

    std::vector<int> verts{5, 6, 7, 8, 9};
    CHECK(find_isomorphism(induced_subgraph(two_c5, verts), Graph::cycle(5))
              .status == SearchStatus::found);
    std::vector<int> bad{0, 0};
    CHECK_THROWS_AS(induced_subgraph(two_c5, bad), std::invalid_argument);
}

TEST_CASE("partition validation") {
    CHECK_NOTHROW(validate_partition({{{0, 1}, {2}}}, 3));
    CHECK_THROWS_AS(validate_partition({{{0, 1}, {1, 2}}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_partition({{{0, 1}}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_partition({{{0}, {}}}, 1), std::invalid_argument);
}

TEST_CASE("isomorphism search") {
    SUBCASE("C4 and K_{2,2}") {
        Graph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        auto iso = find_isomorphism(Graph::cycle(4), k22);
        REQUIRE(iso.status == SearchStatus::found);
        // verify the witness directly
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                CHECK(Graph::cycle(4).adjacent(u, v) ==
                      k22.adjacent((*iso.iso)[u], (*iso.iso)[v]));
    }
    SUBCASE("C6 vs two triangles") {
        Graph two_k3 = disjoint_union(Graph::complete(3), Graph::complete(3));
        CHECK(find_isomorphism(Graph::cycle(6), two_k3).status ==
              SearchStatus::none);
    }
    SUBCASE("Petersen is Kneser(5,2)") {
        CHECK(find_isomorphism(corpus::petersen(), corpus::kneser_n_2(5)).status ==
              SearchStatus::found);
    }
    SUBCASE("equivalence relation on a small pool") {
        std::mt19937 rng(777);
        std::vector<Graph> pool;
        for (int i = 0; i < 8; ++i) pool.push_back(random_graph(4 + i % 5, 0.5, rng));
        pool.push_back(Graph::cycle(6));
        pool.push_back(disjoint_union(Graph::complete(3), Graph::complete(3)));
        for (const auto& a : pool) {
            CHECK(find_isomorphism(a, a).status == SearchStatus::found);
            for (const auto& b : pool) {
                auto ab = find_isomorphism(a, b);
                auto ba = find_isomorphism(b, a);
                CHECK((ab.status == SearchStatus::found) ==
                      (ba.status == SearchStatus::found));
                for (const auto& c : pool) {
                    auto bc = find_isomorphism(b, c);
                    auto ac = find_isomorphism(a, c);
                    if (ab.status == SearchStatus::found &&
                        bc.status == SearchStatus::found)
                        CHECK(ac.status == SearchStatus::found);
                }
            }
        }
    }
}
