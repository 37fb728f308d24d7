// Timing harness comparing the OpenMP kernels against their serial reference
// implementations on synthetic inputs.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "phsq/io.hpp"
#include "phsq/synthetic.hpp"

using namespace phsq;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& body, int repeats) {
    auto start = clock_type::now();
    for (int r = 0; r < repeats; ++r) body();
    auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

point_cloud random_cloud(std::mt19937& rng, std::size_t count, int dim) {
    std::uniform_real_distribution<double> coord(0, 1);
    point_cloud cloud;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        for (double& c : p) c = coord(rng);
        cloud.points.push_back(std::move(p));
    }
    return cloud;
}

void bench_stsq(const filtered_complex& x, const cochain& s, unsigned k, int repeats) {
    cochain serial_result(0), parallel_result(0);
    double serial_ms =
        time_ms([&] { serial_result = stsq_serial(k, s, x); }, repeats);
    double parallel_ms = time_ms([&] { parallel_result = stsq(k, s, x); }, repeats);
    bool agree = serial_result == parallel_result;
    std::printf("stsq k=%u  support=%zu  serial %9.2f ms  parallel %9.2f ms  speedup %.2fx  %s\n",
                k, s.size(), serial_ms, parallel_ms, serial_ms / parallel_ms,
                agree ? "match" : "MISMATCH");
}

void bench_rank_table(const filtered_complex& x, unsigned k, int d, int repeats) {
    std::vector<graded_triple> z = persistence_triples(x);
    rank_table serial_table, parallel_table;
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    double serial_ms = time_ms(
        [&] {
            omp_set_num_threads(1);
            serial_table = rank_inv_table(z, x, k, d);
        },
        repeats);
    double parallel_ms = time_ms(
        [&] {
            omp_set_num_threads(max_threads);
            parallel_table = rank_inv_table(z, x, k, d);
        },
        repeats);
#else
    double serial_ms = time_ms([&] { serial_table = rank_inv_table(z, x, k, d); }, repeats);
    double parallel_ms = serial_ms;
    parallel_table = serial_table;
#endif
    bool agree = serial_table.entries.size() == parallel_table.entries.size();
    for (std::size_t i = 0; agree && i < serial_table.entries.size(); ++i)
        agree = serial_table.entries[i].rank == parallel_table.entries[i].rank;
    std::printf(
        "rankinv table k=%u d=%d  n=%lld  serial %9.2f ms  parallel %9.2f ms  speedup %.2fx  %s\n",
        k, d, static_cast<long long>(x.size()), serial_ms, parallel_ms, serial_ms / parallel_ms,
        agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, serial build\n");
#endif

    std::mt19937 rng(20240229);

    // dense Rips complex: large 1-cochain support stresses the pair loop
    point_cloud cloud = random_cloud(rng, 60, 3);
    filtered_complex rips = rips_filtration(cloud, rips_config{0.6, 2});
    std::printf("rips complex: %lld simplices, dimension %d\n",
                static_cast<long long>(rips.size()), rips.dimension());
    cochain edges = random_cochain(rng, rips, 1);
    bench_stsq(rips, edges, 1, 3);
    bench_stsq(rips, edges, 2, 3);

    cochain triangles = random_cochain(rng, rips, 2);
    bench_stsq(rips, triangles, 1, 3);

    // rank-invariant sweep over a mid-size random filtration
    filtered_complex x = random_filtered_complex(rng, 160, 3, 24);
    bench_rank_table(x, 1, 1, 3);
    bench_rank_table(x, 2, 2, 3);

    return 0;
}
