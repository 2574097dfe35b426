#include "supersat/graph.hpp"

#include <algorithm>

namespace supersat {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = u >> 6; w < words_; ++w) {
            std::uint64_t bits = r[w];
            if (w == (u >> 6)) bits &= ~((2ull << (u & 63)) - 1);  // keep v > u
            while (bits) {
                int v = (w << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph graph_from_edge_list(const EdgeList& el) { return graph_from_edges(el.n, el.edges); }

EdgeList edge_list_of(const Graph& g) { return EdgeList{g.n(), g.edges()}; }

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

}  // namespace supersat
