#pragma once

#include <vector>

#include "supersat/constructions.hpp"
#include "supersat/wide.hpp"

namespace supersat {

// Derived quantities behind the closed-form minimum: write 2(q+1) = d*n + m
// with 0 <= m < n, then split q+1 edges as e1 = floor((d*n + min(2m, n))/4)
// and e2 = q+1-e1.
struct FormulaParams {
    long long n = 0;
    long long q = 0;
    long long d = 0;
    long long m = 0;
    long long e1 = 0;
    long long e2 = 0;

    static FormulaParams from(long long n, long long q);
};

// f(spec) = 2(n-4) b1 b2
//           + sum over parts i of [ sum_v C(phi(v),2) * v_j (v_j - 2)
//                                   + C(b_i,2) * v_j ]     with j the other part.
u128 f_value(const PartitionSpec& spec);

// Identical algebra, entry point taking explicit per-part degree sequences;
// validates that the degree sums match 2*b1 and 2*b2.
u128 count_formula_extremal(int v1, int v2, long long b1, long long b2,
                            const std::vector<int>& part1_degrees,
                            const std::vector<int>& part2_degrees);

// (n/2) * [ C(e1,2) + C(e2,2) + m C(d+1,2) n/2 + (n-m) C(d,2) n/2 + 4 e1 e2 ]
// evaluated in exact integer arithmetic; for odd n the rational value is
// rounded half-up.
u128 asymptotic_h(const FormulaParams& p);

// floor(9 q^2 n / 8); intended for the q/n -> infinity regime.
u128 asymptotic_h_simple(long long n, long long q);

// floor((q+1)^2 (13n/4 + 13)); valid for q <= n^2/20, else RegimeViolated.
u128 upper_bound_value(long long n, long long q);

}  // namespace supersat
