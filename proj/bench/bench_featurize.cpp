// Serial reference vs OpenMP batch featurization on an IDX image file.
//
//   bench_featurize <images-idx3-ubyte> [count] [max_threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "topoclass/image.hpp"
#include "topoclass/landscape.hpp"

using namespace topoclass;
using clock_type = std::chrono::steady_clock;

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <images-idx3-ubyte> [count] [max_threads]\n", argv[0]);
        return 2;
    }
    auto images = load_idx_images(argv[1]);
    const std::size_t count = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1000;
    if (images.size() > count) images.resize(count);
    const int max_threads = argc > 3 ? std::atoi(argv[3]) : omp_get_num_procs();
    const LandscapeParams params{3, 50, 0.0, 1.0};

    auto t0 = clock_type::now();
    const auto reference = featurize_batch_serial(images, params);
    const double serial = std::chrono::duration<double>(clock_type::now() - t0).count();
    std::printf("images=%zu procs=%d\n", images.size(), omp_get_num_procs());
    std::printf("%-10s %8.3f s  %8.1f img/s\n", "serial", serial, images.size() / serial);

    for (int t = 1; t <= max_threads; t *= 2) {
        t0 = clock_type::now();
        const auto out = featurize_batch(images, params, t);
        const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
        std::printf("omp x%-5d %8.3f s  %8.1f img/s  speedup %.2f  %s\n", t, dt, images.size() / dt, serial / dt,
                    out == reference ? "match" : "MISMATCH");
    }
    return 0;
}
