#include <chrono>
#include <cstdio>
#include <random>

#include "CLI11.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "supersat/counting.hpp"

using namespace supersat;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

template <class F>
double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel counting benchmark"};
    int n = 2000;
    double density = 0.3;
    int reps = 3;
    std::uint64_t seed = 1;
    int threads = 0;
    app.add_option("--n", n, "vertex count");
    app.add_option("--density", density, "edge probability");
    app.add_option("--reps", reps, "repetitions per kernel");
    app.add_option("--seed", seed, "graph seed");
    app.add_option("--threads", threads, "worker thread count");
    CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    Graph g = random_graph(n, density, seed);
    std::printf("n=%d m=%llu density=%.3f reps=%d\n", n, (unsigned long long)g.edge_count(),
                density, reps);

    u128 serial_bowties = 0, parallel_bowties = 0;
    double ts = 0, tp = 0;
    for (int r = 0; r < reps; ++r) ts += time_of([&] { serial_bowties = count_bowties_serial(g); });
    for (int r = 0; r < reps; ++r) tp += time_of([&] { parallel_bowties = count_bowties(g); });
    ts /= reps;
    tp /= reps;
    std::printf("bowties serial   %10.4fs  value=%s\n", ts, to_string(serial_bowties).c_str());
    std::printf("bowties parallel %10.4fs  value=%s  speedup=%.2fx\n", tp,
                to_string(parallel_bowties).c_str(), tp > 0 ? ts / tp : 0.0);
    if (serial_bowties != parallel_bowties) {
        std::fprintf(stderr, "kernel mismatch\n");
        return 1;
    }
    return 0;
}
