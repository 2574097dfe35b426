#pragma once

#include <cstdint>

#include "supersat/constructions.hpp"
#include "supersat/wide.hpp"

namespace supersat {

struct SearchResult {
    u128 min_value = 0;
    PartitionSpec witness;       // part sizes ceil(n/2)+a and floor(n/2)-a
    long long a = 0;
    long long b1 = 0;
    long long b2 = 0;
    bool realizable = false;     // both parts pass trifree_feasibility
    std::uint64_t cells_examined = 0;
};

// Exact minimum of f over part-size offsets |a| <= max_offset and all splits
// b1 + b2 = ex_bowtie(n) + q - v1*v2, with each part's degree sequence fixed
// to the near-regular rounding.  The minimum ranges over cells whose parts
// are constructible; when no such cell exists the best non-constructible
// cell is reported with realizable = false.  Ties break by smallest |a|,
// then smallest a, then smallest b1.
SearchResult minimize_f(long long n, long long q, long long max_offset = 2);

// build_hstar on the witness; requires result.realizable.
Graph realize_witness(const SearchResult& result);

// Greedy single-edge relocation (delete one edge, insert one non-edge) until
// no move lowers the bowtie count or `budget` moves were accepted.
Graph local_search_refine(const Graph& g, std::uint64_t budget);

}  // namespace supersat
