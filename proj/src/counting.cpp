#include "supersat/counting.hpp"

namespace supersat {

namespace {

std::uint64_t intersect_count(const Graph& g, int u, int v) {
    const std::uint64_t* a = g.row(u);
    const std::uint64_t* b = g.row(v);
    std::uint64_t c = 0;
    for (int w = 0; w < g.words(); ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

CountReport count_impl(const Graph& g, bool parallel) {
    CountReport r;
    r.edges = g.edges();
    r.per_edge_triangles.assign(r.edges.size(), 0);
    r.per_vertex_triangles.assign(g.n(), 0);

    const long long m = (long long)r.edges.size();
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = r.edges[i];
        r.per_edge_triangles[i] = intersect_count(g, u, v);
    }

    u128 tri3 = 0;
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = r.edges[i];
        std::uint64_t t = r.per_edge_triangles[i];
        r.per_vertex_triangles[u] += t;
        r.per_vertex_triangles[v] += t;
        tri3 = add_checked(tri3, t);
    }
    // every triangle is tallied once per edge and twice per vertex
    r.triangles = tri3 / 3;
    for (int v = 0; v < g.n(); ++v) r.per_vertex_triangles[v] /= 2;

    u128 bow = 0;
    for (int v = 0; v < g.n(); ++v) bow = add_checked(bow, binom2(r.per_vertex_triangles[v]));
    u128 shared = 0;
    for (long long i = 0; i < m; ++i) shared = add_checked(shared, binom2(r.per_edge_triangles[i]));
    r.bowties = sub_checked(bow, mul_checked(2, shared));
    return r;
}

}  // namespace

CountReport count_triangles(const Graph& g) { return count_impl(g, true); }
CountReport count_triangles_serial(const Graph& g) { return count_impl(g, false); }

u128 count_bowties(const Graph& g) { return count_impl(g, true).bowties; }
u128 count_bowties_serial(const Graph& g) { return count_impl(g, false).bowties; }

u128 count_bowties_naive(const Graph& g) {
    const int n = g.n();
    u128 total = 0;
    int s[5];
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
                        for (int c = 0; c < 5; ++c) {
                            int o[4], k = 0;
                            for (int i = 0; i < 5; ++i)
                                if (i != c) o[k++] = s[i];
                            // 3 ways to pair the four non-central vertices
                            static const int pair3[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                            for (auto& p : pair3) {
                                int x = o[p[0]], y = o[p[1]], z = o[p[2]], w = o[p[3]];
                                if (g.has_edge(s[c], x) && g.has_edge(s[c], y) && g.has_edge(x, y) &&
                                    g.has_edge(s[c], z) && g.has_edge(s[c], w) && g.has_edge(z, w))
                                    total = add_checked(total, 1);
                            }
                        }
                    }
    return total;
}

u128 bowties_containing_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw EdgeAbsent("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    Graph h = g;
    h.remove_edge(u, v);
    return sub_checked(count_bowties(g), count_bowties(h));
}

}  // namespace supersat
