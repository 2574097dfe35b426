#pragma once

#include <cstdint>
#include <vector>

#include "supersat/graph.hpp"
#include "supersat/wide.hpp"

namespace supersat {

struct OracleOptions {
    int witness_cap = 10;
    std::uint64_t budget = 100'000'000;  // enumeration size guard
    bool prune_bound = true;             // branch-and-bound pruning
    bool prune_symmetry = false;         // restrict to sorted degree sequences
};

struct OracleReport {
    int n = 0;
    long long q = 0;
    long long target_edges = 0;
    u128 optimum = 0;                    // max edges (ex) or min bowties (h)
    std::vector<EdgeList> witnesses;     // up to witness_cap optimal graphs
    std::uint64_t graphs_examined = 0;
    double wall_time = 0.0;
};

// Maximum edge count of a bowtie-free graph on n vertices, n <= 8.
OracleReport ex_exact(int n, const OracleOptions& opts = {});

// Minimum bowtie count over all graphs with n vertices and ex_bowtie(n)+q
// edges, n <= 8, C(C(n,2), target) within opts.budget.
OracleReport h_exact(int n, long long q, const OracleOptions& opts = {});

struct UniquenessReport {
    int n = 0;
    long long edges = 0;
    std::uint64_t labeled_graphs = 0;
    std::vector<EdgeList> class_representatives;
    std::vector<std::uint64_t> class_sizes;
    std::vector<bool> class_is_turan_plus_edge;
};

// Bucket every bowtie-free graph with exactly ex_bowtie(n) edges by
// isomorphism (minimum adjacency string over vertex permutations), n <= 7.
UniquenessReport extremal_uniqueness(int n, const OracleOptions& opts = {});

}  // namespace supersat
