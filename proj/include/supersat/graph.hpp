#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "supersat/errors.hpp"

namespace supersat {

// Undirected simple graph on vertices 0..n-1, dense bitset adjacency.
// Immutable in practice once built; nothing here mutates shared state, so
// const Graph& is safe to read from any number of threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), bits_((std::size_t)n * (std::size_t)((n + 63) / 64), 0) {
        if (n < 0) throw OutOfRange("negative vertex count");
    }

    int n() const { return n_; }
    int words() const { return words_; }

    const std::uint64_t* row(int v) const { return bits_.data() + (std::size_t)v * words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        set_bit(u, v);
        set_bit(v, u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (!has_edge(u, v))
            throw EdgeAbsent("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
        clear_bit(u, v);
        clear_bit(v, u);
        --m_;
    }

    int degree(int v) const {
        check_vertex(v);
        const std::uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    std::uint64_t edge_count() const { return m_; }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw OutOfRange("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
    void set_bit(int u, int v) { bits_[(std::size_t)u * words_ + (v >> 6)] |= 1ull << (v & 63); }
    void clear_bit(int u, int v) { bits_[(std::size_t)u * words_ + (v >> 6)] &= ~(1ull << (v & 63)); }

    int n_ = 0;
    int words_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Vertex count plus strictly sorted (u,v) pairs with u < v.  Round-trips
// losslessly with Graph.
struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph graph_from_edge_list(const EdgeList& el);
EdgeList edge_list_of(const Graph& g);

// Vertices of b are appended after those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace supersat
