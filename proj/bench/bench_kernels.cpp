// Compares the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "rosette/pattern.hpp"
#include "rosette/presets.hpp"
#include "rosette/tiling.hpp"

namespace {

double time_ms(const std::function<std::size_t()>& fn, int reps, std::size_t& sink) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) sink += fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::size_t sink = 0;
    std::printf("threads: %d\n", omp_get_max_threads());

    rosette::PatternSpec big;
    big.n = 2000;
    big.s = 40;
    big.radii.clear();
    for (int w = 1; w <= big.s; ++w) big.radii.push_back(10.0 * w);
    big.alpha = 3.0;
    big.spr = -2.0;
    big.special = 20;

    const double gen_par = time_ms([&] { return rosette::generate(big).size(); }, 20, sink);
    const double gen_ser = time_ms([&] { return rosette::generate_serial(big).size(); }, 20, sink);
    std::printf("generate    N=%d S=%d   parallel %8.3f ms  serial %8.3f ms  speedup %.2fx\n", big.n, big.s,
                gen_par, gen_ser, gen_ser / gen_par);

    for (int side : {10, 40, 100}) {
        rosette::TilingSpec spec = rosette::find_preset("table3-3").config.tiling_spec();
        spec.rows = side;
        spec.cols = side;
        const double par = time_ms([&] { return rosette::tile_plane(spec).size(); }, 3, sink);
        const double ser = time_ms([&] { return rosette::tile_plane_serial(spec).size(); }, 3, sink);
        std::printf("tile_plane  %3dx%-3d       parallel %8.3f ms  serial %8.3f ms  speedup %.2fx\n", side, side,
                    par, ser, ser / par);
    }
    std::printf("(checksum %zu)\n", sink);
    return 0;
}
