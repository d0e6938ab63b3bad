#include <doctest.h>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vtc/symmetry.hpp"

using namespace vtc;

TEST_CASE("automorphism group sizes against the permutation oracle") {
    Graph c4 = Graph::cycle(4);
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                  {2, 3}, {2, 4}, {2, 5}});
    CHECK(oracle::automorphism_count(c4) == 8);
    CHECK(oracle::automorphism_count(k33) == 72);

    auto a1 = automorphism_group(c4);
    CHECK(a1.complete);
    CHECK(a1.perms.size() == 8);
    auto a2 = automorphism_group(k33);
    CHECK(a2.complete);
    CHECK(a2.perms.size() == 72);
}

TEST_CASE("Petersen has 120 automorphisms") {
    auto a = automorphism_group(corpus::petersen());
    CHECK(a.complete);
    CHECK(a.perms.size() == 120);
    CHECK(oracle::automorphism_count(corpus::petersen()) == 120);
}

TEST_CASE("automorphism list is a group") {
    for (const Graph& g : {Graph::cycle(4), corpus::path(4),
                           corpus::cocktail_party(3)}) {
        auto a = automorphism_group(g);
        REQUIRE(a.complete);
        std::set<Permutation> members(a.perms.begin(), a.perms.end());
        Permutation id(g.vertex_count());
        std::iota(id.begin(), id.end(), 0);
        CHECK(members.count(id) == 1);
        for (const auto& p : a.perms) {
            CHECK(members.count(inverse_permutation(p)) == 1);
            for (const auto& q : a.perms)
                CHECK(members.count(compose(p, q)) == 1);
        }
    }
}

TEST_CASE("overflow outcome") {
    // the empty graph on 9 vertices has 9! automorphisms
    auto a = automorphism_group(Graph::empty(9), 100);
    CHECK_FALSE(a.complete);
    CHECK(a.perms.size() == 100);
    CHECK_THROWS_AS(is_vertex_transitive(Graph::empty(9), 100),
                    AutomorphismOverflow);
}

TEST_CASE("vertex transitivity") {
    CHECK_FALSE(is_vertex_transitive(corpus::path(3)));
    CHECK(is_vertex_transitive(Graph::cycle(6)));
    CHECK(is_vertex_transitive(line_graph(Graph::complete(6)).graph));
    CHECK(is_vertex_transitive(corpus::petersen()));
    CHECK(is_vertex_transitive(Graph::empty(0)));
}

TEST_CASE("arc transitivity") {
    CHECK(is_arc_transitive(Graph::cycle(5)));
    CHECK(is_arc_transitive(lexicographic_product(Graph::cycle(5), Graph::empty(2))));
    Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(is_arc_transitive(k4_minus));
    CHECK_THROWS_AS(is_arc_transitive(Graph::empty(3)), std::invalid_argument);
}

TEST_CASE("arc transitive implies vertex transitive on the corpus") {
    std::vector<Graph> pool{Graph::cycle(5),
                            Graph::cycle(6),
                            Graph::complete(4),
                            corpus::petersen(),
                            corpus::cocktail_party(3),
                            lexicographic_product(Graph::cycle(5), Graph::empty(2)),
                            corpus::path(4),
                            line_graph(Graph::complete(6)).graph};
    for (const auto& g : pool) {
        if (g.edge_count() == 0) continue;
        bool isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) isolated = true;
        if (isolated) continue;
        if (is_arc_transitive(g)) CHECK(is_vertex_transitive(g));
    }
}

TEST_CASE("orbital lemma check") {
    SUBCASE("C6 with the parity map") {
        Graph c6 = Graph::cycle(6);
        Homomorphism parity(c6, c6, {0, 1, 0, 1, 0, 1});
        Retraction retr(c6, {0, 1, 0, 1, 0, 1});
        auto report = check_lemma_orbitals(c6, parity, retr);
        CHECK(report.passed);
        CHECK(report.checked == 12);  // 12 automorphisms, one core pair
    }
    SUBCASE("K_{3,3} with a retraction onto an edge") {
        Graph x(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                    {2, 3}, {2, 4}, {2, 5}});
        auto r = find_retraction_to(x, std::vector<int>{0, 3});
        REQUIRE(r.status == SearchStatus::found);
        auto report = check_lemma_orbitals(x, r.retraction->hom(), *r.retraction);
        CHECK(report.passed);
        CHECK(report.checked == 72);
    }
    SUBCASE("a core graph is vacuously clean") {
        Graph p = corpus::petersen();
        std::vector<int> id(10);
        std::iota(id.begin(), id.end(), 0);
        Homomorphism identity(p, p, id);
        Retraction retr(p, id);
        auto report = check_lemma_orbitals(p, identity, retr);
        CHECK(report.passed);
        CHECK(report.violations.empty());
    }
    SUBCASE("non-core retract is rejected") {
        Graph c6 = Graph::cycle(6);
        std::vector<int> id{0, 1, 2, 3, 4, 5};
        Homomorphism parity(c6, c6, {0, 1, 0, 1, 0, 1});
        CHECK_THROWS_AS(
            check_lemma_orbitals(c6, parity, Retraction(c6, id)),
            std::invalid_argument);
    }
}
