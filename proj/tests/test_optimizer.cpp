#include <vector>

#include "doctest.h"
#include "supersat/counting.hpp"
#include "supersat/formulas.hpp"
#include "supersat/optimizer.hpp"
#include "supersat/oracle.hpp"

using namespace supersat;

TEST_CASE("minimum at n=5 q=1 with tie-break") {
    SearchResult r = minimize_f(5, 1, 1);
    CHECK(r.min_value == 2);
    CHECK(r.a == 0);
    CHECK(r.b1 == 1);
    CHECK(r.b2 == 1);
    CHECK(r.realizable);
    CHECK(r.witness.v1 == 3);
    CHECK(r.witness.v2 == 2);
    CHECK(f_value(r.witness) == r.min_value);
}

TEST_CASE("minimum at n=6 q=1") {
    SearchResult r = minimize_f(6, 1, 1);
    CHECK(r.min_value == 4);
    CHECK(r.a == 0);
    CHECK(r.b1 == 1);
    CHECK(r.b2 == 1);
}

TEST_CASE("no bowties needed at q=0") {
    SearchResult r = minimize_f(100, 0, 2);
    CHECK(r.min_value == 0);
    CHECK(r.a == 0);
    CHECK(r.b1 + r.b2 == 1);
    CHECK(r.realizable);
    Graph g = realize_witness(r);
    CHECK(g.edge_count() == 2501);
    CHECK(count_bowties(g) == 0);
}

TEST_CASE("realized witnesses match the predicted count") {
    SearchResult r5 = minimize_f(5, 1, 2);
    Graph g5 = realize_witness(r5);
    CHECK(g5.edge_count() == 8);
    CHECK(count_bowties(g5) == 2);

    SearchResult r6 = minimize_f(6, 1, 2);
    Graph g6 = realize_witness(r6);
    CHECK(g6.edge_count() == 11);
    CHECK(count_bowties(g6) == 4);
}

TEST_CASE("oracle agreement on every enumerable cell") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 1}}) {
        SearchResult r = minimize_f(n, q, 2);
        OracleReport o = h_exact(n, q);
        CHECK(r.min_value == o.optimum);
        if (r.realizable) CHECK(count_bowties(realize_witness(r)) == r.min_value);
    }
}

TEST_CASE("minimum is monotone in q") {
    for (long long n : {20, 33}) {
        u128 prev = 0;
        for (long long q = 0; q <= 12; ++q) {
            u128 cur = minimize_f(n, q, 2).min_value;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("balanced split wins for moderate q") {
    for (long long n : {40, 42, 44}) {
        for (long long q = 0; q <= n / 10; ++q) {
            SearchResult r = minimize_f(n, q, 2);
            CHECK(r.a == 0);
        }
    }
    for (long long q = 0; q <= 4; ++q) {
        SearchResult r = minimize_f(41, q, 2);
        CHECK((r.a == 0 || r.a == -1));
    }
}

TEST_CASE("single-unit degree perturbation never improves f") {
    SearchResult r = minimize_f(30, 4, 2);
    REQUIRE(r.realizable);
    const PartitionSpec& w = r.witness;
    for (int i = 0; i < w.v1; ++i)
        for (int j = 0; j < w.v1; ++j) {
            if (i == j || w.phi[i] == 0) continue;
            PartitionSpec moved = w;
            moved.phi[i] -= 1;
            moved.phi[j] += 1;
            CHECK(f_value(moved) >= r.min_value);
        }
}

TEST_CASE("cells examined and infeasible inputs") {
    SearchResult r = minimize_f(5, 1, 0);
    CHECK(r.cells_examined > 0);
    CHECK_THROWS_AS(minimize_f(4, 1, 2), TooSmall);
    CHECK_THROWS_AS(minimize_f(5, -1, 2), PreconditionViolated);
    CHECK_THROWS_AS(minimize_f(5, 100, 2), Infeasible);
}

TEST_CASE("local search leaves optima alone") {
    Graph g = realize_witness(minimize_f(5, 1, 2));
    Graph refined = local_search_refine(g, 100);
    CHECK(refined == g);
}

TEST_CASE("local search improves a clumsy surplus placement") {
    // all surplus edges in one clique corner of a part
    Graph g = turan(2, 8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    u128 before = count_bowties(g);
    Graph refined = local_search_refine(g, 1000);
    CHECK(refined.n() == g.n());
    CHECK(refined.edge_count() == g.edge_count());
    CHECK(count_bowties(refined) < before);
}

TEST_CASE("local search keeps bipartite graphs intact") {
    Graph g = turan(2, 10);
    Graph refined = local_search_refine(g, 50);
    CHECK(refined == g);
    CHECK(count_bowties(refined) == 0);
}

TEST_CASE("budget zero is a no-op") {
    Graph g = turan(2, 8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    CHECK(local_search_refine(g, 0) == g);
}
