#pragma once

#include <optional>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

// Two-part vertex split with a target within-part degree for every vertex.
// Vertices 0..v1-1 form part 1, v1..v1+v2-1 part 2.
struct PartitionSpec {
    int v1 = 0;
    int v2 = 0;
    std::vector<int> phi;

    long long part_degree_sum(int part) const;  // part is 1 or 2
    long long b1() const { return part_degree_sum(1) / 2; }
    long long b2() const { return part_degree_sum(2) / 2; }
};

// alpha vertices of degree a plus beta vertices of degree b; a-regular
// when the degrees coincide.
struct DegreeProfile {
    long long alpha = 0;
    long long a = 0;
    long long beta = 0;
    long long b = 0;
};

// Complete r-partite graph with near-equal parts.
Graph turan(int r, int n);

// floor(n^2/4) + 1; the bowtie Turan number, valid for n >= 5.
long long ex_bowtie(long long n);

enum class ExtremalVariant { edge_in_larger_part, edge_in_smaller_part };

// turan(2, n) plus one edge inside the chosen part.
Graph extremal_bowtie_free(int n, ExtremalVariant variant);

// Complete bipartite K(ceil(n/2), floor(n/2)) plus q+1 edges placed between
// two disjoint n/4-subsets of the larger side with degrees as equal as
// possible (larger degrees on the lowest-indexed vertices of each subset).
Graph upper_bound_graph(int n, long long q);

// Balanced bipartite graph with 2i vertices of degree d+1 and 2m of degree d;
// requires d < i+m (or an empty graph when all three are zero).
Graph trifree_even(long long d, long long i, long long m);

// 4k+1 vertices: 4k of degree k, one of degree 2m; requires k >= m >= 0.
Graph trifree_odd(long long k, long long m);

// Triangle-free graph with the exact degree multiset of the profile.
// Throws Unrealizable with reason parity, density or unsupported.
Graph realize_trifree(const DegreeProfile& profile);

// Same dispatch as realize_trifree without building anything; empty optional
// means a construction exists.
std::optional<UnrealizableReason> trifree_feasibility(const DegreeProfile& profile);

// K(V1,V2) plus, inside each part, a triangle-free graph whose degree
// sequence is the near-regular rounding of that part's phi sum.
Graph build_hstar(const PartitionSpec& spec);

// Near-regular rounding of 2b among v vertices as a profile: (2b mod v)
// vertices of degree floor(2b/v)+1, the rest of degree floor(2b/v).
DegreeProfile near_regular_profile(long long v, long long b);

}  // namespace supersat
