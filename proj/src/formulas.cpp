#include "supersat/formulas.hpp"

#include <numeric>
#include <string>

namespace supersat {

namespace {

using i128 = __int128;

i128 binom2_i(i128 x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Shared algebra of the two formula entry points.  The per-vertex terms can
// be negative when the opposite part has fewer than two vertices; the total
// is nonnegative whenever the parts admit triangle-free realizations.
i128 f_signed(i128 v1, i128 v2, i128 b1, i128 b2, const std::vector<int>& deg1,
              const std::vector<int>& deg2) {
    i128 n = v1 + v2;
    i128 f = 2 * (n - 4) * b1 * b2;
    for (int d : deg1) f += binom2_i(d) * v2 * (v2 - 2);
    f += binom2_i(b1) * v2;
    for (int d : deg2) f += binom2_i(d) * v1 * (v1 - 2);
    f += binom2_i(b2) * v1;
    return f;
}

u128 to_unsigned(i128 f) {
    if (f < 0)
        throw Unrealizable(UnrealizableReason::density,
                           "negative bowtie formula value: no triangle-free realization");
    return (u128)f;
}

}  // namespace

u128 f_value(const PartitionSpec& spec) {
    if (spec.v1 < 0 || spec.v2 < 0 || (int)spec.phi.size() != spec.v1 + spec.v2)
        throw PreconditionViolated("f_value: phi size must equal v1+v2");
    long long s1 = spec.part_degree_sum(1), s2 = spec.part_degree_sum(2);
    if (s1 % 2 != 0 || s2 % 2 != 0)
        throw PreconditionViolated("f_value: per-part degree sums must be even");
    std::vector<int> d1(spec.phi.begin(), spec.phi.begin() + spec.v1);
    std::vector<int> d2(spec.phi.begin() + spec.v1, spec.phi.end());
    return to_unsigned(f_signed(spec.v1, spec.v2, s1 / 2, s2 / 2, d1, d2));
}

u128 count_formula_extremal(int v1, int v2, long long b1, long long b2,
                            const std::vector<int>& part1_degrees,
                            const std::vector<int>& part2_degrees) {
    if ((int)part1_degrees.size() != v1 || (int)part2_degrees.size() != v2)
        throw PreconditionViolated("count_formula_extremal: degree sequence length mismatch");
    long long s1 = std::accumulate(part1_degrees.begin(), part1_degrees.end(), 0ll);
    long long s2 = std::accumulate(part2_degrees.begin(), part2_degrees.end(), 0ll);
    if (s1 != 2 * b1 || s2 != 2 * b2)
        throw PreconditionViolated("count_formula_extremal: degree sums inconsistent with b1,b2");
    return to_unsigned(f_signed(v1, v2, b1, b2, part1_degrees, part2_degrees));
}

FormulaParams FormulaParams::from(long long n, long long q) {
    if (n < 5) throw TooSmall("FormulaParams: n >= 5 required");
    if (q < 0) throw PreconditionViolated("FormulaParams: q >= 0 required");
    FormulaParams p;
    p.n = n;
    p.q = q;
    p.d = 2 * (q + 1) / n;
    p.m = 2 * (q + 1) - p.d * n;
    p.e1 = (p.d * n + std::min(2 * p.m, n)) / 4;
    p.e2 = q + 1 - p.e1;
    return p;
}

u128 asymptotic_h(const FormulaParams& p) {
    if (p.n < 5) throw TooSmall("asymptotic_h: n >= 5 required");
    u128 n = p.n, m = p.m, d = p.d, e1 = p.e1, e2 = p.e2;
    // value = n/2 * [ C(e1,2) + C(e2,2) + m C(d+1,2) n/2 + (n-m) C(d,2) n/2
    //               + 4 e1 e2 ]; evaluated as an eighth of an integer and
    //               rounded half-up for odd n
    u128 flat = add_checked(add_checked(binom2(e1), binom2(e2)), mul_checked(4, mul_checked(e1, e2)));
    u128 scaled = add_checked(mul_checked(m, binom2(d + 1)), mul_checked(n - m, binom2(d)));
    u128 num = add_checked(mul_checked(mul_checked(4, n), flat),
                           mul_checked(mul_checked(2, mul_checked(n, n)), scaled));
    return add_checked(num, 4) / 8;
}

u128 asymptotic_h_simple(long long n, long long q) {
    if (n < 0 || q < 0) throw PreconditionViolated("asymptotic_h_simple: nonnegative arguments");
    u128 qq = mul_checked((u128)q, (u128)q);
    return mul_checked(9, mul_checked(qq, (u128)n)) / 8;
}

u128 upper_bound_value(long long n, long long q) {
    if (n < 5) throw TooSmall("upper_bound_value: n >= 5 required");
    if (q < 0) throw PreconditionViolated("upper_bound_value: q >= 0 required");
    if (20 * q > n * n)
        throw RegimeViolated("upper_bound_value: requires q <= n^2/20, got q=" + std::to_string(q) +
                             " n=" + std::to_string(n));
    u128 s = mul_checked((u128)(q + 1), (u128)(q + 1));
    return mul_checked(s, mul_checked(13, (u128)(n + 4))) / 4;
}

}  // namespace supersat
