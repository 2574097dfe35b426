#include "supersat/optimizer.hpp"

#include <algorithm>
#include <vector>

#include "supersat/counting.hpp"
#include "supersat/errors.hpp"

namespace supersat {

namespace {

using i128 = __int128;

i128 madd(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r)) throw Overflow("signed 128-bit add overflow");
    return r;
}

i128 mmul(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Overflow("signed 128-bit mul overflow");
    return r;
}

i128 binom2_i(i128 x) { return x < 2 ? 0 : mmul(x, x - 1) / 2; }

i128 f_profiles(long long v1, long long v2, long long b1, long long b2,
                const DegreeProfile& p1, const DegreeProfile& p2) {
    i128 n = (i128)v1 + v2;
    i128 f = mmul(mmul(2, n - 4), mmul(b1, b2));
    i128 t1 = madd(mmul(p1.alpha, binom2_i(p1.a)), mmul(p1.beta, binom2_i(p1.b)));
    i128 t2 = madd(mmul(p2.alpha, binom2_i(p2.a)), mmul(p2.beta, binom2_i(p2.b)));
    f = madd(f, madd(mmul(t1, mmul(v2, (i128)v2 - 2)), mmul(binom2_i(b1), v2)));
    f = madd(f, madd(mmul(t2, mmul(v1, (i128)v1 - 2)), mmul(binom2_i(b2), v1)));
    return f;
}

std::vector<int> profile_phi(const DegreeProfile& p) {
    std::vector<int> phi;
    phi.reserve((size_t)(p.alpha + p.beta));
    phi.insert(phi.end(), (size_t)p.alpha, (int)p.a);
    phi.insert(phi.end(), (size_t)p.beta, (int)p.b);
    return phi;
}

struct Cell {
    i128 f = 0;
    bool realizable = false;
};

}  // namespace

SearchResult minimize_f(long long n, long long q, long long max_offset) {
    if (q < 0) throw PreconditionViolated("minimize_f: q >= 0 required");
    if (max_offset < 0) throw PreconditionViolated("minimize_f: max_offset >= 0 required");
    long long total = ex_bowtie(n) + q;
    if (total > n * (n - 1) / 2)
        throw Infeasible("minimize_f: ex(n)+q exceeds the number of vertex pairs");

    std::vector<long long> offsets{0};
    for (long long k = 1; k <= max_offset; ++k) {
        offsets.push_back(-k);
        offsets.push_back(k);
    }

    SearchResult best, best_any;
    i128 best_f = 0, any_f = 0;
    bool have_best = false, have_any = false;
    std::uint64_t cells = 0;

    for (long long a : offsets) {
        long long v1 = (n + 1) / 2 + a, v2 = n / 2 - a;
        if (v1 < 0 || v2 < 0) continue;
        long long bad = total - v1 * v2;
        long long slots1 = v1 * (v1 - 1) / 2, slots2 = v2 * (v2 - 1) / 2;
        if (bad < 0 || bad > slots1 + slots2) continue;
        long long lo = std::max(0ll, bad - slots2), hi = std::min(bad, slots1);
        if (lo > hi) continue;
        size_t ncells = (size_t)(hi - lo + 1);
        std::vector<Cell> row(ncells);

#pragma omp parallel for schedule(dynamic, 64)
        for (long long idx = 0; idx < (long long)ncells; ++idx) {
            long long b1 = lo + idx, b2 = bad - b1;
            DegreeProfile p1 = near_regular_profile(v1, b1);
            DegreeProfile p2 = near_regular_profile(v2, b2);
            row[idx].f = f_profiles(v1, v2, b1, b2, p1, p2);
            row[idx].realizable = !trifree_feasibility(p1) && !trifree_feasibility(p2);
        }

        cells += ncells;
        for (size_t idx = 0; idx < ncells; ++idx) {
            long long b1 = lo + (long long)idx, b2 = bad - b1;
            const Cell& c = row[idx];
            if (c.realizable && (!have_best || c.f < best_f)) {
                have_best = true;
                best_f = c.f;
                best.min_value = (u128)c.f;
                best.a = a;
                best.b1 = b1;
                best.b2 = b2;
                best.realizable = true;
            }
            if (!c.realizable && c.f >= 0 && (!have_any || c.f < any_f)) {
                have_any = true;
                any_f = c.f;
                best_any.min_value = (u128)c.f;
                best_any.a = a;
                best_any.b1 = b1;
                best_any.b2 = b2;
                best_any.realizable = false;
            }
        }
    }

    if (!have_best && !have_any)
        throw Infeasible("minimize_f: no admissible (a, b1, b2) cell");
    SearchResult out = have_best ? best : best_any;
    out.cells_examined = cells;
    long long v1 = (n + 1) / 2 + out.a, v2 = n / 2 - out.a;
    out.witness.v1 = (int)v1;
    out.witness.v2 = (int)v2;
    out.witness.phi = profile_phi(near_regular_profile(v1, out.b1));
    std::vector<int> phi2 = profile_phi(near_regular_profile(v2, out.b2));
    out.witness.phi.insert(out.witness.phi.end(), phi2.begin(), phi2.end());
    return out;
}

Graph realize_witness(const SearchResult& result) { return build_hstar(result.witness); }

Graph local_search_refine(const Graph& g, std::uint64_t budget) {
    Graph cur = g;
    u128 count = count_bowties(cur);
    std::uint64_t moves = 0;
    bool improved = true;
    while (improved && moves < budget && count > 0) {
        improved = false;
        auto edges = cur.edges();
        for (size_t ei = 0; ei < edges.size() && !improved; ++ei) {
            auto [eu, ev] = edges[ei];
            cur.remove_edge(eu, ev);
            for (int x = 0; x < cur.n() && !improved; ++x) {
                for (int y = x + 1; y < cur.n(); ++y) {
                    if (cur.has_edge(x, y) || (x == eu && y == ev)) continue;
                    cur.add_edge(x, y);
                    u128 c = count_bowties(cur);
                    if (c < count) {
                        count = c;
                        ++moves;
                        improved = true;
                        break;
                    }
                    cur.remove_edge(x, y);
                }
            }
            if (!improved) cur.add_edge(eu, ev);
        }
    }
    return cur;
}

}  // namespace supersat
