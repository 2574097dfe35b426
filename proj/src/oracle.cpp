#include "supersat/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "supersat/constructions.hpp"
#include "supersat/errors.hpp"

namespace supersat {

namespace {

using std::uint32_t;
using std::uint64_t;

// Adjacency rows as 8-bit masks; large enough for every exhaustive cap here.
struct Tiny {
    int n = 0;
    std::array<uint32_t, 8> adj{};

    void add(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    void remove(int u, int v) {
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
    }
    int deg(int v) const { return __builtin_popcount(adj[v]); }
};

std::vector<std::pair<int, int>> slot_pairs(int n) {
    std::vector<std::pair<int, int>> s;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) s.emplace_back(u, v);
    return s;
}

uint64_t tiny_bowties(const Tiny& g) {
    int tv[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    uint64_t pairs_at_edge = 0;
    for (int u = 0; u < g.n; ++u) {
        uint32_t rest = g.adj[u] & ~((2u << u) - 1);
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            int t = __builtin_popcount(g.adj[u] & g.adj[v]);
            pairs_at_edge += (uint64_t)t * (t - 1) / 2;
            tv[u] += t;
            tv[v] += t;
        }
    }
    uint64_t pairs_at_vertex = 0;
    for (int v = 0; v < g.n; ++v) {
        int t = tv[v] / 2;
        pairs_at_vertex += (uint64_t)t * (t - 1) / 2;
    }
    return pairs_at_vertex - 2 * pairs_at_edge;
}

EdgeList mask_to_edges(int n, const std::vector<std::pair<int, int>>& slots, uint32_t mask) {
    EdgeList el;
    el.n = n;
    for (int i = 0; i < (int)slots.size(); ++i)
        if (mask >> i & 1u) el.edges.push_back(slots[i]);
    return el;
}

Tiny tiny_of(const Graph& g) {
    Tiny t;
    t.n = g.n();
    for (auto [u, v] : g.edges()) t.add(u, v);
    return t;
}

// Minimum over vertex relabelings of the row-major n*n adjacency bit string;
// n <= 8 keeps the key inside 64 bits.
uint64_t canon_key(const Tiny& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t key = 0;
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) key = key << 1 | (g.adj[perm[u]] >> perm[v] & 1u);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

u128 enumeration_size(int slots, int choose) {
    u128 r = 1;
    for (int i = 1; i <= choose; ++i) r = mul_checked(r, (u128)(slots - choose + i)) / (u128)i;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct ExShard {
    int best = 0;
    std::vector<uint32_t> witnesses;
    std::exception_ptr error;
};

void ex_dfs(Tiny& g, const std::vector<std::pair<int, int>>& slots, int next, int depth,
            uint32_t mask, ExShard& sh, int cap, std::atomic<uint64_t>& nodes, uint64_t budget,
            std::atomic<bool>& stop) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (depth > sh.best) {
        sh.best = depth;
        sh.witnesses.clear();
    }
    if (depth == sh.best && (int)sh.witnesses.size() < cap) sh.witnesses.push_back(mask);
    for (int j = next; j < (int)slots.size(); ++j) {
        auto [u, v] = slots[j];
        g.add(u, v);
        if (tiny_bowties(g) == 0) {
            if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
                stop.store(true, std::memory_order_relaxed);
                g.remove(u, v);
                return;
            }
            ex_dfs(g, slots, j + 1, depth + 1, mask | (1u << j), sh, cap, nodes, budget, stop);
        }
        g.remove(u, v);
    }
}

struct HShard {
    uint64_t best = ~0ull;
    std::vector<uint32_t> witnesses;
    uint64_t leaves = 0;
    std::exception_ptr error;
};

struct HCtx {
    std::vector<std::pair<int, int>> slots;
    std::vector<int> row_done_at;  // row u is fully decided once next slot >= row_done_at[u]
    int target = 0;
    int cap = 0;
    bool prune_bound = true;
    bool prune_symmetry = false;
};

bool symmetry_violated(const Tiny& g, const HCtx& c, int next) {
    for (int u = 0; u + 1 < g.n; ++u) {
        if (c.row_done_at[u] > next) break;
        if (g.deg(u) < g.deg(u + 1)) return true;
    }
    return false;
}

void h_dfs(Tiny& g, const HCtx& c, int next, int chosen, uint32_t mask, HShard& sh) {
    if (chosen == c.target) {
        uint64_t b = tiny_bowties(g);
        ++sh.leaves;
        if (b < sh.best) {
            sh.best = b;
            sh.witnesses.clear();
        }
        if (b == sh.best && (int)sh.witnesses.size() < c.cap) sh.witnesses.push_back(mask);
        return;
    }
    // Count-safe: adding edges never removes a bowtie, so a prefix already
    // beating the incumbent strictly cannot complete to anything better.
    if (c.prune_bound && tiny_bowties(g) > sh.best) return;
    // Count-safe: every graph has a relabeling with nonincreasing degrees, and
    // that labeling survives the check (a later row's partial degree only
    // grows), so at least one optimal representative is always retained.
    if (c.prune_symmetry && symmetry_violated(g, c, next)) return;
    int last = (int)c.slots.size() - (c.target - chosen);
    for (int j = next; j <= last; ++j) {
        auto [u, v] = c.slots[j];
        g.add(u, v);
        h_dfs(g, c, j + 1, chosen + 1, mask | (1u << j), sh);
        g.remove(u, v);
    }
}

}  // namespace

OracleReport ex_exact(int n, const OracleOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (n < 1) throw TooSmall("ex_exact: n >= 1 required");
    if (n > 8) throw TooLarge("ex_exact: exhaustive search capped at n = 8");
    if (opts.budget < 1) throw BudgetExceeded("ex_exact: budget excludes even the empty graph");
    auto slots = slot_pairs(n);
    int S = (int)slots.size();
    std::vector<ExShard> shards(S);
    std::atomic<uint64_t> nodes{1};
    std::atomic<bool> stop{false};

#pragma omp parallel for schedule(dynamic)
    for (int s0 = 0; s0 < S; ++s0) {
        try {
            Tiny g;
            g.n = n;
            auto [u, v] = slots[s0];
            g.add(u, v);
            if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts.budget) {
                stop.store(true, std::memory_order_relaxed);
            } else {
                ex_dfs(g, slots, s0 + 1, 1, 1u << s0, shards[s0], opts.witness_cap, nodes,
                       opts.budget, stop);
            }
        } catch (...) {
            shards[s0].error = std::current_exception();
        }
    }
    for (auto& sh : shards)
        if (sh.error) std::rethrow_exception(sh.error);
    if (stop.load())
        throw BudgetExceeded("ex_exact: more than " + std::to_string(opts.budget) +
                             " bowtie-free graphs");

    OracleReport rep;
    rep.n = n;
    int best = 0;
    for (auto& sh : shards) best = std::max(best, sh.best);
    if (best == 0 && opts.witness_cap > 0) rep.witnesses.push_back(mask_to_edges(n, slots, 0));
    for (auto& sh : shards)
        if (sh.best == best)
            for (uint32_t m : sh.witnesses)
                if ((int)rep.witnesses.size() < opts.witness_cap)
                    rep.witnesses.push_back(mask_to_edges(n, slots, m));
    rep.target_edges = best;
    rep.optimum = (u128)best;
    rep.graphs_examined = nodes.load();
    rep.wall_time = seconds_since(t0);
    return rep;
}

OracleReport h_exact(int n, long long q, const OracleOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (n > 8) throw TooLarge("h_exact: exhaustive search capped at n = 8");
    if (q < 0) throw PreconditionViolated("h_exact: q >= 0 required");
    long long target = ex_bowtie(n) + q;
    auto slots = slot_pairs(n);
    int S = (int)slots.size();
    if (target > S) throw Infeasible("h_exact: ex(n)+q exceeds the number of vertex pairs");
    if (enumeration_size(S, (int)target) > (u128)opts.budget)
        throw BudgetExceeded("h_exact: C(" + std::to_string(S) + "," + std::to_string(target) +
                             ") exceeds budget " + std::to_string(opts.budget));

    HCtx ctx;
    ctx.slots = slots;
    ctx.target = (int)target;
    ctx.cap = opts.witness_cap;
    ctx.prune_bound = opts.prune_bound;
    ctx.prune_symmetry = opts.prune_symmetry;
    ctx.row_done_at.assign(n, 0);
    for (int u = 0, acc = 0; u < n; ++u) {
        acc += n - 1 - u;
        ctx.row_done_at[u] = acc;
    }

    int nshards = S - (int)target + 1;
    std::vector<HShard> shards(nshards);
#pragma omp parallel for schedule(dynamic)
    for (int s0 = 0; s0 < nshards; ++s0) {
        try {
            Tiny g;
            g.n = n;
            auto [u, v] = slots[s0];
            g.add(u, v);
            h_dfs(g, ctx, s0 + 1, 1, 1u << s0, shards[s0]);
        } catch (...) {
            shards[s0].error = std::current_exception();
        }
    }
    for (auto& sh : shards)
        if (sh.error) std::rethrow_exception(sh.error);

    OracleReport rep;
    rep.n = n;
    rep.q = q;
    rep.target_edges = target;
    uint64_t best = ~0ull;
    uint64_t leaves = 0;
    for (auto& sh : shards) {
        best = std::min(best, sh.best);
        leaves += sh.leaves;
    }
    for (auto& sh : shards)
        if (sh.best == best)
            for (uint32_t m : sh.witnesses)
                if ((int)rep.witnesses.size() < opts.witness_cap)
                    rep.witnesses.push_back(mask_to_edges(n, slots, m));
    rep.optimum = best;
    rep.graphs_examined = leaves;
    rep.wall_time = seconds_since(t0);
    return rep;
}

UniquenessReport extremal_uniqueness(int n, const OracleOptions& opts) {
    if (n > 7) throw TooLarge("extremal_uniqueness: exhaustive search capped at n = 7");
    long long target = ex_bowtie(n);
    auto slots = slot_pairs(n);
    int S = (int)slots.size();
    if (enumeration_size(S, (int)target) > (u128)opts.budget)
        throw BudgetExceeded("extremal_uniqueness: C(" + std::to_string(S) + "," +
                             std::to_string(target) + ") exceeds budget " +
                             std::to_string(opts.budget));

    UniquenessReport rep;
    rep.n = n;
    rep.edges = target;
    std::unordered_map<uint64_t, size_t> bucket;
    std::vector<uint64_t> keys;

    Tiny g;
    g.n = n;
    auto leaf = [&](uint32_t mask) {
        ++rep.labeled_graphs;
        uint64_t key = canon_key(g);
        auto it = bucket.find(key);
        if (it == bucket.end()) {
            bucket.emplace(key, keys.size());
            keys.push_back(key);
            rep.class_representatives.push_back(mask_to_edges(n, slots, mask));
            rep.class_sizes.push_back(1);
        } else {
            ++rep.class_sizes[it->second];
        }
    };
    struct Rec {
        Tiny& g;
        const std::vector<std::pair<int, int>>& slots;
        int target;
        decltype(leaf)& emit;
        void run(int next, int chosen, uint32_t mask) {
            if (tiny_bowties(g) > 0) return;
            if (chosen == target) {
                emit(mask);
                return;
            }
            int last = (int)slots.size() - (target - chosen);
            for (int j = next; j <= last; ++j) {
                auto [u, v] = slots[j];
                g.add(u, v);
                run(j + 1, chosen + 1, mask | (1u << j));
                g.remove(u, v);
            }
        }
    } rec{g, slots, (int)target, leaf};
    rec.run(0, 0, 0);

    uint64_t larger = canon_key(tiny_of(extremal_bowtie_free(n, ExtremalVariant::edge_in_larger_part)));
    uint64_t smaller = canon_key(tiny_of(extremal_bowtie_free(n, ExtremalVariant::edge_in_smaller_part)));
    for (uint64_t k : keys) rep.class_is_turan_plus_edge.push_back(k == larger || k == smaller);
    return rep;
}

}  // namespace supersat
