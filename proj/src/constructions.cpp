#include "supersat/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace supersat {

long long PartitionSpec::part_degree_sum(int part) const {
    long long s = 0;
    int lo = part == 1 ? 0 : v1;
    int hi = part == 1 ? v1 : v1 + v2;
    for (int v = lo; v < hi; ++v) s += phi[v];
    return s;
}

Graph turan(int r, int n) {
    if (r < 1) throw PreconditionViolated("turan: r must be >= 1");
    if (n < 0) throw PreconditionViolated("turan: n must be >= 0");
    std::vector<int> part(n);
    int idx = 0;
    for (int p = 0; p < r; ++p) {
        int size = n / r + (p < n % r ? 1 : 0);
        for (int j = 0; j < size; ++j) part[idx++] = p;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

long long ex_bowtie(long long n) {
    if (n < 5) throw TooSmall("ex_bowtie: defined for n >= 5, got n=" + std::to_string(n));
    return n * n / 4 + 1;
}

Graph extremal_bowtie_free(int n, ExtremalVariant variant) {
    if (n < 5) throw TooSmall("extremal_bowtie_free: n >= 5 required");
    Graph g = turan(2, n);
    int v1 = (n + 1) / 2;  // first part is the larger one
    if (variant == ExtremalVariant::edge_in_larger_part)
        g.add_edge(0, 1);
    else
        g.add_edge(v1, v1 + 1);
    return g;
}

Graph upper_bound_graph(int n, long long q) {
    if (n < 5) throw TooSmall("upper_bound_graph: n >= 5 required");
    if (q < 0) throw PreconditionViolated("upper_bound_graph: q >= 0 required");
    long long np = n / 4;
    if (q + 1 > np * np)
        throw Unrealizable(UnrealizableReason::density,
                           "upper_bound_graph: cannot place " + std::to_string(q + 1) +
                               " edges between two sets of size " + std::to_string(np));
    int u1 = (n + 1) / 2;
    Graph g(n);
    for (int u = 0; u < u1; ++u)
        for (int v = u1; v < n; ++v) g.add_edge(u, v);
    // q+1 edges between W1 = U1[0..np) and W2 = U1[np..2np), degrees as equal
    // as possible, larger degrees on the lowest-indexed vertices of each W_i
    long long lo = (q + 1) / np;
    for (long long e = 0; e <= q; ++e) {
        long long j = e % np;
        long long shift = e / np;
        long long col = (j + shift + np - lo % np) % np;
        g.add_edge((int)j, (int)(np + col));
    }
    return g;
}

Graph trifree_even(long long d, long long i, long long m) {
    if (d < 0 || i < 0 || m < 0)
        throw PreconditionViolated("trifree_even: negative parameter");
    if (i + m == 0) {
        if (d == 0) return Graph(0);
        throw PreconditionViolated("trifree_even: d < i+m required");
    }
    if (d >= i + m) throw PreconditionViolated("trifree_even: d < i+m required");
    long long s = i + m;
    Graph g((int)(2 * s));
    for (long long j = 0; j < i; ++j) g.add_edge((int)j, (int)(s + j));
    for (long long l = 1; l <= d; ++l)
        for (long long j = 0; j < s; ++j) g.add_edge((int)j, (int)(s + (j + l) % s));
    return g;
}

Graph trifree_odd(long long k, long long m) {
    if (m < 0 || k < m) throw PreconditionViolated("trifree_odd: k >= m >= 0 required");
    Graph g((int)(4 * k + 1));
    auto U = [k](long long i, long long j) { return (int)(1 + (i - 1) * k + j); };
    for (long long i : {1, 3})
        for (long long j = 0; j < m; ++j) g.add_edge(0, U(i, j));
    for (long long j = m; j < k; ++j) g.add_edge(U(1, j), U(3, j));
    for (long long j = 0; j < k; ++j) g.add_edge(U(2, j), U(4, j));
    for (long long i : {1, 3})
        for (long long j1 = 0; j1 < k; ++j1)
            for (long long j2 = 0; j2 < k; ++j2)
                if (j1 != j2) g.add_edge(U(i, j1), U(i + 1, j2));
    return g;
}

namespace {

// ---- helpers for realize_trifree ----------------------------------------

// Distances strictly between v/3 and v/2.  Sums of two of them always land
// in (2v/3, v) mod v, which is disjoint from the set, so any circulant built
// on them is triangle-free.  Only used with odd v.
std::vector<long long> circulant_distances(long long v) {
    std::vector<long long> out;
    for (long long t = v / 3 + 1; 2 * t < v; ++t) out.push_back(t);
    return out;
}

void add_distance_class(Graph& g, long long v, long long t) {
    for (long long j = 0; j < v; ++j) {
        long long k = (j + t) % v;
        g.add_edge((int)std::min(j, k), (int)std::max(j, k));
    }
}

// r/2 pairwise disjoint edges of the distance-t class: walk each of the
// gcd(t,v) cycles taking alternate edges.
std::vector<std::pair<int, int>> partial_matching(long long v, long long t, long long want) {
    std::vector<std::pair<int, int>> out;
    long long g = std::gcd(t, v);
    long long len = v / g;
    for (long long start = 0; start < g && want > 0; ++start) {
        long long pos = start, steps = 0;
        while (want > 0 && steps + 1 < len) {
            long long u = pos, w = (pos + t) % v;
            out.emplace_back((int)std::min(u, w), (int)std::max(u, w));
            pos = (pos + 2 * t) % v;
            steps += 2;
            --want;
        }
    }
    if (want > 0) throw PreconditionViolated("partial_matching: capacity exhausted");
    return out;
}

bool near_regular_odd_feasible(long long v, long long d, long long r) {
    auto D = circulant_distances(v);
    if (d % 2 == 0) {
        long long need = d / 2 + (r > 0 ? 1 : 0);
        if (need > (long long)D.size()) return false;
        if (r > 0) {
            long long g = std::gcd(D[d / 2], v);
            if (r / 2 > (v - g) / 2) return false;
        }
        return true;
    }
    long long need = (d + 1) / 2;
    if (need > (long long)D.size()) return false;
    for (long long idx = 0; idx < need; ++idx)
        if (std::gcd(D[idx], v) <= r) return true;
    return false;
}

// v odd, v-r vertices of degree d and r of degree d+1, d*v+r even.
Graph near_regular_odd_build(long long v, long long d, long long r) {
    auto D = circulant_distances(v);
    Graph g((int)v);
    if (d % 2 == 0) {
        for (long long c = 0; c < d / 2; ++c) add_distance_class(g, v, D[c]);
        if (r > 0)
            for (auto [x, y] : partial_matching(v, D[d / 2], r / 2)) g.add_edge(x, y);
        return g;
    }
    // d odd forces r odd: build (d+1)/2 full classes, then delete a matching
    // of (v-r)/2 edges from one class whose cycle count gcd is at most r
    long long need = (d + 1) / 2;
    long long pick = -1;
    for (long long idx = 0; idx < need; ++idx)
        if (std::gcd(D[idx], v) <= r) {
            pick = idx;
            break;
        }
    if (pick < 0) throw PreconditionViolated("near_regular_odd_build: no usable class");
    for (long long c = 0; c < need; ++c) add_distance_class(g, v, D[c]);
    for (auto [x, y] : partial_matching(v, D[pick], (v - r) / 2)) g.remove_edge(x, y);
    return g;
}

bool regular_even_feasible(long long v, long long deg) { return deg == 0 || deg <= v / 2; }

Graph regular_even_build(long long v, long long deg) {
    if (deg == 0) return Graph((int)v);
    return trifree_even(deg - 1, v / 2, 0);
}

// c_hi vertices of degree hi plus c_lo of degree hi-1, both counts even.
bool even_profile_feasible(long long c_hi, long long hi, long long c_lo) {
    if (c_hi == 0 && c_lo == 0) return true;
    if (c_hi == 0) return regular_even_feasible(c_lo, hi - 1);
    if (c_lo == 0) return regular_even_feasible(c_hi, hi);
    return hi - 1 < (c_hi + c_lo) / 2;
}

Graph even_profile_build(long long c_hi, long long hi, long long c_lo) {
    if (c_hi == 0 && c_lo == 0) return Graph(0);
    if (c_hi == 0) return regular_even_build(c_lo, hi - 1);
    if (c_lo == 0) return regular_even_build(c_hi, hi);
    return trifree_even(hi - 1, c_hi / 2, c_lo / 2);
}

bool even_rest_feasible(long long alpha, long long a, long long beta, long long b) {
    return a > b ? even_profile_feasible(alpha, a, beta) : even_profile_feasible(beta, b, alpha);
}

Graph even_rest_build(long long alpha, long long a, long long beta, long long b) {
    return a > b ? even_profile_build(alpha, a, beta) : even_profile_build(beta, b, alpha);
}

struct TrifreePlan {
    enum Kind {
        fail,
        edgeless,     // v vertices, degree 0
        reg_even,     // v even, degree deg
        reg_odd,      // v odd, degree deg even: circulant
        both_even,    // two even classes
        peel_a,       // odd-count class sheds a (4a,a,1,a)-graph
        peel_b,       // sheds a (4b,b,1,a)-graph across both classes
        matching01,   // degrees {0,1}
        paths21,      // degrees {2,1}: disjoint paths
        near_reg,     // circulant with one partial/deleted matching class
    } kind = fail;
    UnrealizableReason reason = UnrealizableReason::unsupported;
    long long alpha = 0, a = 0, beta = 0, b = 0;  // canonical orientation
};

TrifreePlan plan_trifree(const DegreeProfile& p) {
    TrifreePlan pl;
    long long alpha = p.alpha, a = p.a, beta = p.beta, b = p.b;
    if (alpha < 0 || beta < 0 || a < 0 || b < 0) {
        pl.reason = UnrealizableReason::unsupported;
        return pl;
    }
    if ((alpha * a + beta * b) % 2 != 0) {
        pl.reason = UnrealizableReason::parity;
        return pl;
    }
    if (alpha == 0) {
        alpha = beta;
        a = b;
        beta = 0;
    }
    if (beta == 0 || a == b) {
        long long v = alpha + beta, deg = a;
        pl.alpha = v;
        pl.a = deg;
        if (v == 0 || deg == 0) {
            pl.kind = TrifreePlan::edgeless;
            return pl;
        }
        if (deg >= v) {
            pl.reason = UnrealizableReason::density;
            return pl;
        }
        if (v % 2 == 0) {
            if (regular_even_feasible(v, deg)) pl.kind = TrifreePlan::reg_even;
            else pl.reason = UnrealizableReason::density;
            return pl;
        }
        // odd order: the parity check above forces deg even
        if (deg / 2 <= (long long)circulant_distances(v).size()) pl.kind = TrifreePlan::reg_odd;
        else pl.reason = UnrealizableReason::density;
        return pl;
    }
    if (std::llabs(a - b) != 1) {
        pl.reason = UnrealizableReason::unsupported;
        return pl;
    }
    if (alpha % 2 == 0 && beta % 2 == 0) {
        pl.alpha = alpha; pl.a = a; pl.beta = beta; pl.b = b;
        if (even_rest_feasible(alpha, a, beta, b)) pl.kind = TrifreePlan::both_even;
        else pl.reason = UnrealizableReason::density;
        return pl;
    }
    // exactly one count is odd; orient so alpha is odd (then a is even)
    if (alpha % 2 == 0) {
        std::swap(alpha, beta);
        std::swap(a, b);
    }
    pl.alpha = alpha; pl.a = a; pl.beta = beta; pl.b = b;
    if (alpha >= 4 * a + 1 && even_rest_feasible(alpha - 4 * a - 1, a, beta, b)) {
        pl.kind = TrifreePlan::peel_a;
        return pl;
    }
    if (beta >= 4 * b && b >= a / 2 && even_rest_feasible(alpha - 1, a, beta - 4 * b, b)) {
        pl.kind = TrifreePlan::peel_b;
        return pl;
    }
    if (a == 0 && b == 1) {
        pl.kind = TrifreePlan::matching01;
        return pl;
    }
    if (a == 2 && b == 1 && beta >= 2) {
        pl.kind = TrifreePlan::paths21;
        return pl;
    }
    if (near_regular_odd_feasible(alpha + beta, std::min(a, b), a > b ? alpha : beta)) {
        pl.kind = TrifreePlan::near_reg;
        return pl;
    }
    pl.reason = UnrealizableReason::density;
    return pl;
}

Graph execute_plan(const TrifreePlan& pl) {
    switch (pl.kind) {
        case TrifreePlan::edgeless:
            return Graph((int)pl.alpha);
        case TrifreePlan::reg_even:
            return regular_even_build(pl.alpha, pl.a);
        case TrifreePlan::reg_odd: {
            Graph g((int)pl.alpha);
            auto D = circulant_distances(pl.alpha);
            for (long long c = 0; c < pl.a / 2; ++c) add_distance_class(g, pl.alpha, D[c]);
            return g;
        }
        case TrifreePlan::both_even:
            return even_rest_build(pl.alpha, pl.a, pl.beta, pl.b);
        case TrifreePlan::peel_a:
            return disjoint_union(trifree_odd(pl.a, pl.a / 2),
                                  even_rest_build(pl.alpha - 4 * pl.a - 1, pl.a, pl.beta, pl.b));
        case TrifreePlan::peel_b:
            return disjoint_union(trifree_odd(pl.b, pl.a / 2),
                                  even_rest_build(pl.alpha - 1, pl.a, pl.beta - 4 * pl.b, pl.b));
        case TrifreePlan::matching01: {
            Graph g((int)(pl.alpha + pl.beta));
            for (long long j = 0; j < pl.beta / 2; ++j)
                g.add_edge((int)(pl.alpha + 2 * j), (int)(pl.alpha + 2 * j + 1));
            return g;
        }
        case TrifreePlan::paths21: {
            // interior vertices 0..alpha-1, endpoints after them
            Graph g((int)(pl.alpha + pl.beta));
            long long npaths = pl.beta / 2;
            long long iv = 0, ep = pl.alpha;
            for (long long p = 0; p < npaths; ++p) {
                long long len = pl.alpha / npaths + (p < pl.alpha % npaths ? 1 : 0);
                long long prev = ep;
                for (long long j = 0; j < len; ++j) {
                    g.add_edge((int)std::min(prev, iv), (int)std::max(prev, iv));
                    prev = iv++;
                }
                g.add_edge((int)std::min(prev, ep + 1), (int)std::max(prev, ep + 1));
                ep += 2;
            }
            return g;
        }
        case TrifreePlan::near_reg:
            return near_regular_odd_build(pl.alpha + pl.beta, std::min(pl.a, pl.b),
                                          pl.a > pl.b ? pl.alpha : pl.beta);
        case TrifreePlan::fail:
            break;
    }
    throw Unrealizable(pl.reason, "no triangle-free construction for this profile");
}

}  // namespace

Graph realize_trifree(const DegreeProfile& profile) { return execute_plan(plan_trifree(profile)); }

std::optional<UnrealizableReason> trifree_feasibility(const DegreeProfile& profile) {
    TrifreePlan pl = plan_trifree(profile);
    if (pl.kind == TrifreePlan::fail) return pl.reason;
    return std::nullopt;
}

DegreeProfile near_regular_profile(long long v, long long b) {
    if (v <= 0) {
        if (b > 0) throw Unrealizable(UnrealizableReason::density, "edges in an empty part");
        return DegreeProfile{0, 0, 0, 0};
    }
    long long d = 2 * b / v, r = 2 * b % v;
    if (r == 0) return DegreeProfile{v, d, 0, d};
    return DegreeProfile{r, d + 1, v - r, d};
}

Graph build_hstar(const PartitionSpec& spec) {
    if (spec.v1 < 0 || spec.v2 < 0 || (int)spec.phi.size() != spec.v1 + spec.v2)
        throw PreconditionViolated("build_hstar: phi size must equal v1+v2");
    for (int x : spec.phi)
        if (x < 0) throw PreconditionViolated("build_hstar: negative phi entry");
    long long s1 = spec.part_degree_sum(1), s2 = spec.part_degree_sum(2);
    if (s1 % 2 != 0 || s2 % 2 != 0)
        throw PreconditionViolated("build_hstar: per-part degree sums must be even");

    Graph p1 = realize_trifree(near_regular_profile(spec.v1, s1 / 2));
    Graph p2 = realize_trifree(near_regular_profile(spec.v2, s2 / 2));
    Graph g = disjoint_union(p1, p2);
    for (int u = 0; u < spec.v1; ++u)
        for (int v = spec.v1; v < spec.v1 + spec.v2; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace supersat
