#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "supersat/graph.hpp"
#include "supersat/wide.hpp"

namespace supersat {

struct CountReport {
    u128 triangles = 0;
    u128 bowties = 0;
    std::vector<std::uint64_t> per_vertex_triangles;        // t(v), size n
    std::vector<std::pair<int, int>> edges;                 // lex order
    std::vector<std::uint64_t> per_edge_triangles;          // t(e), aligned with edges
};

// Per-vertex and per-edge triangle tallies; vertex loop runs under OpenMP.
CountReport count_triangles(const Graph& g);
// Same result, plain loops, kept as the reference path for tests and bench.
CountReport count_triangles_serial(const Graph& g);

// Number of bowties: pairs of triangles sharing exactly one vertex.
// Computed as sum over v of C(t(v),2) minus, for every edge uv, the C(t(uv),2)
// triangle pairs that share the edge uv (counted from both endpoints).
u128 count_bowties(const Graph& g);
u128 count_bowties_serial(const Graph& g);

// Test oracle: enumerate all 5-vertex subsets and test the pattern directly.
u128 count_bowties_naive(const Graph& g);

// count_bowties(g) - count_bowties(g minus e); throws EdgeAbsent.
u128 bowties_containing_edge(const Graph& g, int u, int v);

}  // namespace supersat
