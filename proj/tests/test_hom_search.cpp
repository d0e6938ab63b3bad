#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vtc/hom_search.hpp"

using namespace vtc;

TEST_CASE("find_homomorphism basics") {
    SUBCASE("odd cycle into a triangle") {
        auto r = find_homomorphism(Graph::cycle(5), Graph::complete(3));
        REQUIRE(r.status == SearchStatus::found);  // ctor verified the map
    }
    SUBCASE("odd cycle has no 2-coloring") {
        CHECK(find_homomorphism(Graph::cycle(5), Graph::complete(2)).status ==
              SearchStatus::none);
    }
    SUBCASE("every graph maps to itself") {
        Graph x = corpus::petersen();
        CHECK(find_homomorphism(x, x).status == SearchStatus::found);
    }
    SUBCASE("tiny budget gives inconclusive, not none") {
        Budget b{.limit = 2};
        auto r = find_homomorphism(Graph::cycle(5), Graph::complete(2), &b);
        CHECK(r.status == SearchStatus::inconclusive);
    }
}

TEST_CASE("find_homomorphism agrees with the exhaustive map oracle") {
    std::vector<Graph> sources;
    for (int n = 1; n <= 4; ++n)
        for (auto& g : oracle::connected_graphs(n)) sources.push_back(std::move(g));
    std::vector<Graph> targets{Graph::complete(2), Graph::complete(3),
                               Graph::cycle(5),   corpus::path(3),
                               Graph::empty(2),   Graph::cycle(4)};
    for (const auto& x : sources)
        for (const auto& y : targets) {
            auto r = find_homomorphism(x, y);
            REQUIRE(r.status != SearchStatus::inconclusive);
            CHECK((r.status == SearchStatus::found) == oracle::hom_exists(x, y));
        }

    // a deterministic sample of pairs up to 6 vertices on both sides
    std::mt19937 rng(31337);
    std::bernoulli_distribution coin(0.4);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        auto draw = [&] {
            const int n = size(rng);
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) es.emplace_back(u, v);
            return Graph(n, es);
        };
        Graph x = draw(), y = draw();
        auto r = find_homomorphism(x, y);
        REQUIRE(r.status != SearchStatus::inconclusive);
        CHECK((r.status == SearchStatus::found) == oracle::hom_exists(x, y));
    }
}

TEST_CASE("find_retraction_to") {
    SUBCASE("C6 onto an edge is the parity map") {
        std::vector<int> image{0, 1};
        auto r = find_retraction_to(Graph::cycle(6), image);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.retraction->map() == std::vector<int>{0, 1, 0, 1, 0, 1});
    }
    SUBCASE("complete graphs retract onto nothing smaller") {
        std::vector<int> image{0, 1, 2, 3};
        CHECK(find_retraction_to(Graph::complete(5), image).status ==
              SearchStatus::none);
    }
    SUBCASE("C4 onto an edge, checked against all 16 candidate maps") {
        Graph c4 = Graph::cycle(4);
        int valid = 0;
        for (int code = 0; code < 16; ++code) {
            std::vector<int> m(4);
            for (int v = 0; v < 4; ++v) m[v] = (code >> v) & 1;
            if (m[0] != 0 || m[1] != 1) continue;
            bool ok = true;
            for (auto [u, v] : c4.edges())
                if (!c4.adjacent(m[u], m[v])) ok = false;
            if (ok) ++valid;
        }
        CHECK(valid == 1);
        std::vector<int> image{0, 1};
        auto r = find_retraction_to(c4, image);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.retraction->map() == std::vector<int>{0, 1, 0, 1});
    }
    SUBCASE("bad image arguments") {
        Graph c4 = Graph::cycle(4);
        std::vector<int> empty;
        CHECK_THROWS_AS(find_retraction_to(c4, empty), std::invalid_argument);
        std::vector<int> dup{0, 0};
        CHECK_THROWS_AS(find_retraction_to(c4, dup), std::invalid_argument);
    }
}

TEST_CASE("find_core examples") {
    SUBCASE("complete graphs are cores") {
        for (int n = 1; n <= 5; ++n) {
            auto r = find_core(Graph::complete(n));
            REQUIRE(r.status == SearchStatus::found);
            CHECK(static_cast<int>(r.core_vertices.size()) == n);
        }
    }
    SUBCASE("C6 has core K_2") {
        auto r = find_core(Graph::cycle(6));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.core_vertices.size() == 2);
        CHECK(find_isomorphism(r.core, Graph::complete(2)).status ==
              SearchStatus::found);
        // witness is a genuine retraction of C6 onto the core
        CHECK(r.witness->image() == r.core_vertices);
    }
    SUBCASE("Petersen is its own core") {
        auto r = find_core(corpus::petersen());
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.core_vertices.size() == 10);
    }
    SUBCASE("budget exhaustion is explicit and carries the best retract") {
        Budget b{.limit = 10};
        auto r = find_core(Graph::cycle(6), &b);
        CHECK(r.status == SearchStatus::inconclusive);
        CHECK(r.witness.has_value());
    }
    SUBCASE("degenerate sizes") {
        auto empty = find_core(Graph::empty(0));
        CHECK(empty.status == SearchStatus::found);
        CHECK(empty.core_vertices.empty());
        auto single = find_core(Graph::complete(1));
        CHECK(single.status == SearchStatus::found);
        CHECK(single.core_vertices.size() == 1);
        // an edgeless graph collapses to a single vertex
        auto blank = find_core(Graph::empty(4));
        CHECK(blank.core_vertices.size() == 1);
        // isolated vertex plus an edge collapses to the edge
        auto mixed = find_core(Graph(3, {{0, 1}}));
        CHECK(mixed.core_vertices.size() == 2);
    }
}

TEST_CASE("find_core agrees with the subset+map oracle on small graphs") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : oracle::connected_graphs(n)) {
            auto mine = find_core(g);
            REQUIRE(mine.status == SearchStatus::found);
            auto brute = oracle::core(g);
            CHECK(static_cast<int>(mine.core_vertices.size()) == brute.size);
            CHECK(find_isomorphism(mine.core,
                                   induced_subgraph(g, brute.vertices))
                      .status == SearchStatus::found);
        }
    }
}

TEST_CASE("core idempotence and uniqueness up to isomorphism") {
    std::vector<Graph> pool{Graph::cycle(6),
                            Graph::cycle(5),
                            corpus::cocktail_party(3),
                            multiple(Graph::complete(2), 3),
                            line_graph(Graph::complete(4)).graph,
                            disjoint_union(Graph::cycle(5), Graph::cycle(5))};
    std::mt19937 rng(99);
    for (const auto& g : pool) {
        auto first = find_core(g);
        REQUIRE(first.status == SearchStatus::found);
        auto again = find_core(first.core);
        REQUIRE(again.status == SearchStatus::found);
        CHECK(find_isomorphism(again.core, first.core).status ==
              SearchStatus::found);

        // an independent descent order via a random relabeling
        const int n = g.vertex_count();
        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g.edges()) es.emplace_back(relabel[u], relabel[v]);
        auto other = find_core(Graph(n, es));
        REQUIRE(other.status == SearchStatus::found);
        CHECK(find_isomorphism(other.core, first.core).status ==
              SearchStatus::found);
    }
}

TEST_CASE("is_core") {
    CHECK(is_core(Graph::complete(4)) == true);
    CHECK(is_core(Graph::cycle(6)) == false);
    CHECK(is_core(Graph::cycle(5)) == true);
    CHECK(is_core(corpus::petersen()) == true);
}

TEST_CASE("fibres") {
    Graph c6 = Graph::cycle(6);
    Homomorphism parity(c6, c6, {0, 1, 0, 1, 0, 1});
    auto fp = fibres(parity);
    REQUIRE(fp.fibres.size() == 2);
    CHECK(fp.fibres[0].first == 0);
    CHECK(fp.fibres[0].second == std::vector<int>{0, 2, 4});
    CHECK(fp.fibres[1].second == std::vector<int>{1, 3, 5});
}

TEST_CASE("homomorphic equivalence") {
    SUBCASE("L(K_6) and K_5") {
        CHECK(homomorphically_equivalent(line_graph(Graph::complete(6)).graph,
                                         Graph::complete(5)) == true);
    }
    SUBCASE("a graph and its multiple") {
        Graph c5 = Graph::cycle(5);
        CHECK(homomorphically_equivalent(c5, multiple(c5, 2)) == true);
        CHECK(homomorphically_equivalent(c5, multiple(c5, 3)) == true);
    }
    SUBCASE("C5 vs C6, with both directions checked by the oracle") {
        Graph c5 = Graph::cycle(5), c6 = Graph::cycle(6);
        CHECK_FALSE(oracle::hom_exists(c5, c6));
        CHECK(oracle::hom_exists(c6, c5));
        CHECK(homomorphically_equivalent(c5, c6) == false);
    }
}

TEST_CASE("verify_equal_fibres") {
    SUBCASE("C6 parity map has fibres {3,3}") {
        Graph c6 = Graph::cycle(6);
        auto report = verify_equal_fibres(c6, Homomorphism(c6, c6, {0, 1, 0, 1, 0, 1}));
        CHECK(report.equal);
        CHECK(report.expected == 3);
        REQUIRE(report.sizes.size() == 2);
        CHECK(report.sizes[0] == std::pair<int, int>{0, 3});
        CHECK(report.sizes[1] == std::pair<int, int>{1, 3});
    }
    SUBCASE("K_{3,3} retracted to an edge") {
        Graph x(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                    {2, 3}, {2, 4}, {2, 5}});
        auto r = find_retraction_to(x, std::vector<int>{0, 3});
        REQUIRE(r.status == SearchStatus::found);
        auto report = verify_equal_fibres(x, r.retraction->hom());
        CHECK(report.equal);
        CHECK(report.expected == 3);
    }
    SUBCASE("star K_{1,3} has unequal fibres and that is fine") {
        Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
        auto report = verify_equal_fibres(star, Homomorphism(star, star, {0, 1, 1, 1}));
        CHECK_FALSE(report.equal);
        CHECK(report.expected == 2);
        CHECK(report.sizes[0].second == 1);
        CHECK(report.sizes[1].second == 3);
    }
    SUBCASE("image that is not a core is rejected") {
        Graph c6 = Graph::cycle(6);
        std::vector<int> idmap{0, 1, 2, 3, 4, 5};
        CHECK_THROWS_AS(verify_equal_fibres(c6, Homomorphism(c6, c6, idmap)),
                        std::invalid_argument);
    }
}

TEST_CASE("homomorphism and retraction types validate their invariants") {
    Graph c4 = Graph::cycle(4);
    CHECK_THROWS_AS(Homomorphism(c4, c4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Homomorphism(c4, c4, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Homomorphism(c4, c4, {0, 1, 0, 7}), std::invalid_argument);
    // valid hom but not idempotent: rotation
    CHECK_THROWS_AS(Retraction(c4, {1, 2, 3, 0}), std::invalid_argument);
    CHECK_NOTHROW(Retraction(c4, {0, 1, 0, 1}));
}

TEST_CASE("normalize_to_retraction") {
    Graph c6 = Graph::cycle(6);
    // parity composed with rotation: not idempotent, image {1,2}
    std::vector<int> shifted{1, 2, 1, 2, 1, 2};
    Retraction r = normalize_to_retraction(c6, shifted);
    CHECK(r.image().size() == 2);
    for (int v : r.image()) CHECK(r.map()[v] == v);
}
