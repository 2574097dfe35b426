#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "doctest.h"
#include "supersat/constructions.hpp"
#include "supersat/counting.hpp"

using namespace supersat;

namespace {

std::multiset<int> degree_multiset(const Graph& g) {
    std::multiset<int> d;
    for (int v = 0; v < g.n(); ++v) d.insert(g.degree(v));
    return d;
}

std::multiset<int> profile_multiset(const DegreeProfile& p) {
    std::multiset<int> d;
    for (long long i = 0; i < p.alpha; ++i) d.insert((int)p.a);
    for (long long i = 0; i < p.beta; ++i) d.insert((int)p.b);
    return d;
}

bool sparse_window_preconditions(long long alpha, long long a, long long beta, long long b) {
    if (std::llabs(a - b) != 1) return false;
    if ((alpha * a + beta * b) % 2 != 0) return false;
    return 3 * a + 3 * b < alpha + beta - 1;
}

}  // namespace

TEST_CASE("turan graphs") {
    Graph k55 = turan(2, 10);
    CHECK(k55.edge_count() == 25);
    CHECK(count_triangles(k55).triangles == 0);
    Graph t37 = turan(3, 7);
    CHECK(t37.edge_count() == 16);
    CHECK(degree_multiset(t37) == std::multiset<int>{4, 4, 4, 5, 5, 5, 5});
    Graph t14 = turan(1, 4);
    CHECK(t14.edge_count() == 0);
    CHECK_THROWS_AS(turan(0, 4), PreconditionViolated);
}

TEST_CASE("extremal edge count value") {
    CHECK(ex_bowtie(5) == 7);
    CHECK(ex_bowtie(6) == 10);
    CHECK(ex_bowtie(7) == 13);
    CHECK(ex_bowtie(8) == 17);
    CHECK_THROWS_AS(ex_bowtie(4), TooSmall);
}

TEST_CASE("extremal graphs are bowtie-free at the extremal size") {
    for (int n = 5; n <= 64; ++n) {
        for (auto variant :
             {ExtremalVariant::edge_in_larger_part, ExtremalVariant::edge_in_smaller_part}) {
            Graph g = extremal_bowtie_free(n, variant);
            CHECK((long long)g.edge_count() == ex_bowtie(n));
            CHECK(count_bowties(g) == 0);
            long long opposite = variant == ExtremalVariant::edge_in_larger_part ? n / 2 : (n + 1) / 2;
            CHECK(count_triangles(g).triangles == (u128)opposite);
        }
    }
    CHECK_THROWS_AS(extremal_bowtie_free(4, ExtremalVariant::edge_in_larger_part), TooSmall);
}

TEST_CASE("extremal variants differ for odd n") {
    Graph a = extremal_bowtie_free(5, ExtremalVariant::edge_in_larger_part);
    Graph b = extremal_bowtie_free(5, ExtremalVariant::edge_in_smaller_part);
    CHECK(degree_multiset(a) != degree_multiset(b));
}

TEST_CASE("upper bound graph small cases") {
    Graph g8 = upper_bound_graph(8, 0);
    CHECK(g8.edge_count() == 17);
    CHECK(count_bowties(g8) == 0);

    Graph g12 = upper_bound_graph(12, 2);
    CHECK(g12.edge_count() == 39);
    CHECK(count_bowties(g12) <= 468);
    // the three extra edges sit between two 3-subsets of the larger side,
    // degrees as equal as possible
    std::vector<int> extra;
    for (int v = 0; v < 6; ++v) extra.push_back(g12.degree(v) - 6);
    CHECK(std::count(extra.begin(), extra.end(), 1) == 6);

    CHECK_THROWS_AS(upper_bound_graph(8, 10), Unrealizable);
}

TEST_CASE("upper bound graph degree tie-break prefers low indices") {
    // n=16: subsets of size 4; q+1=6 extra edges leave degrees {2,2,1,1} per subset
    Graph g = upper_bound_graph(16, 5);
    CHECK((long long)g.edge_count() == ex_bowtie(16) + 5);
    std::vector<int> w1;
    for (int v = 0; v < 4; ++v) w1.push_back(g.degree(v) - 8);
    CHECK(w1 == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("trifree_even examples") {
    Graph g = trifree_even(1, 1, 1);
    CHECK(g.n() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}});
    CHECK(degree_multiset(g) == std::multiset<int>{2, 2, 1, 1});

    Graph match = trifree_even(0, 2, 0);
    CHECK(match.n() == 4);
    CHECK(match.edge_count() == 2);
    CHECK(degree_multiset(match) == std::multiset<int>{1, 1, 1, 1});

    Graph cyc = trifree_even(2, 0, 3);
    CHECK(cyc.n() == 6);
    CHECK(degree_multiset(cyc) == std::multiset<int>{2, 2, 2, 2, 2, 2});
    CHECK(count_triangles(cyc).triangles == 0);

    CHECK(trifree_even(0, 0, 0).n() == 0);
    CHECK_THROWS_AS(trifree_even(2, 1, 1), PreconditionViolated);
    CHECK_THROWS_AS(trifree_even(-1, 1, 1), PreconditionViolated);
}

TEST_CASE("trifree_odd examples") {
    Graph iso = trifree_odd(1, 0);
    CHECK(iso.n() == 5);
    CHECK(iso.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(iso.degree(0) == 0);

    Graph spoke = trifree_odd(1, 1);
    CHECK(spoke.degree(0) == 2);
    CHECK(spoke.has_edge(0, 1));
    CHECK(spoke.has_edge(0, 3));
    CHECK(degree_multiset(spoke) == std::multiset<int>{2, 1, 1, 1, 1});

    Graph single = trifree_odd(0, 0);
    CHECK(single.n() == 1);
    CHECK(single.edge_count() == 0);

    for (long long k = 0; k <= 5; ++k)
        for (long long m = 0; m <= k; ++m) {
            Graph g = trifree_odd(k, m);
            CHECK(g.n() == 4 * k + 1);
            CHECK(g.degree(0) == 2 * m);
            for (int v = 1; v < g.n(); ++v) CHECK(g.degree(v) == k);
            CHECK(count_triangles(g).triangles == 0);
        }

    CHECK_THROWS_AS(trifree_odd(1, 2), PreconditionViolated);
    CHECK_THROWS_AS(trifree_odd(-1, 0), PreconditionViolated);
}

TEST_CASE("realize_trifree profile cases") {
    Graph g = realize_trifree({7, 2, 4, 1});
    CHECK(g.n() == 11);
    CHECK(degree_multiset(g) == std::multiset<int>{2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1});
    CHECK(count_triangles(g).triangles == 0);

    Graph pm = realize_trifree({4, 1, 0, 0});
    CHECK(pm.n() == 4);
    CHECK(degree_multiset(pm) == std::multiset<int>{1, 1, 1, 1});
    CHECK(realize_trifree({4, 1, 0, 1}) == pm);

    CHECK_THROWS_AS(realize_trifree({3, 1, 3, 2}), Unrealizable);
    try {
        realize_trifree({3, 1, 3, 2});
    } catch (const Unrealizable& e) {
        CHECK(e.reason == UnrealizableReason::parity);
    }
    CHECK(trifree_feasibility({3, 1, 3, 2}) == UnrealizableReason::parity);
    CHECK(!trifree_feasibility({7, 2, 4, 1}));
}

TEST_CASE("realize_trifree matches feasibility over a sweep") {
    for (long long total = 1; total <= 24; ++total)
        for (long long alpha = 0; alpha <= total; ++alpha)
            for (long long a = 0; a <= 6; ++a)
                for (long long b = 0; b <= 6; ++b) {
                    long long beta = total - alpha;
                    DegreeProfile p{alpha, a, beta, b};
                    auto reason = trifree_feasibility(p);
                    if (reason) {
                        CHECK_THROWS_AS(realize_trifree(p), Unrealizable);
                        continue;
                    }
                    Graph g = realize_trifree(p);
                    CHECK(g.n() == alpha + beta);
                    CHECK(degree_multiset(g) == profile_multiset(p));
                    CHECK(count_triangles(g).triangles == 0);
                }
}

TEST_CASE("precondition window always realizes") {
    for (long long total = 2; total <= 24; ++total)
        for (long long alpha = 0; alpha <= total; ++alpha)
            for (long long a = 0; a <= 8; ++a)
                for (long long db : {-1, 1}) {
                    long long b = a + db, beta = total - alpha;
                    if (b < 0) continue;
                    if (!sparse_window_preconditions(alpha, a, beta, b)) continue;
                    CHECK(!trifree_feasibility({alpha, a, beta, b}));
                }
}

TEST_CASE("near regular profile rounding") {
    DegreeProfile p = near_regular_profile(5, 3);
    CHECK(p.alpha == 1);
    CHECK(p.a == 2);
    CHECK(p.beta == 4);
    CHECK(p.b == 1);
    DegreeProfile flat = near_regular_profile(4, 0);
    CHECK(flat.alpha == 4);
    CHECK(flat.a == 0);
    DegreeProfile empty = near_regular_profile(0, 0);
    CHECK(empty.alpha + empty.beta == 0);
    CHECK_THROWS_AS(near_regular_profile(0, 1), Unrealizable);
}

TEST_CASE("build_hstar examples") {
    PartitionSpec one_edge{4, 4, {1, 1, 0, 0, 0, 0, 0, 0}};
    Graph g1 = build_hstar(one_edge);
    CHECK(g1.edge_count() == 17);
    CHECK(count_bowties(g1) == 0);

    PartitionSpec two_edges{4, 4, {1, 1, 1, 1, 0, 0, 0, 0}};
    Graph g2 = build_hstar(two_edges);
    CHECK(g2.edge_count() == 18);
    CHECK(count_bowties(g2) == 4);

    PartitionSpec small{3, 2, {1, 2, 1, 0, 0}};
    Graph g3 = build_hstar(small);
    CHECK(g3.edge_count() == 8);
    CHECK(count_bowties(g3) == 2);

    PartitionSpec bad{3, 2, {1, 1, 1, 0, 0}};
    CHECK_THROWS_AS(build_hstar(bad), PreconditionViolated);
    PartitionSpec short_phi{3, 2, {1, 1}};
    CHECK_THROWS_AS(build_hstar(short_phi), PreconditionViolated);
}
