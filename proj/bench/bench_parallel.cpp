// Serial reference vs OpenMP evaluation of the n-point formulas.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "bkp/npoint_formulas.hpp"
#include "bkp/random_instances.hpp"

using namespace bkp;

namespace {

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
    const AffineB b = random_affine_b(seed);
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-10s %2s %2s %10s %10s %8s %s\n", "formula", "n", "W", "serial_s", "parallel_s", "speedup", "same");

    struct Case {
        const char* name;
        int n;
        int w;
        LaurentSeries (*eval)(const AffineB&, int, int, const EvalOptions&);
    };
    const Case cases[] = {
        {"wangyang", 3, 9, bkp_wangyang_series}, {"embedded", 3, 9, bkp_embedded_series},
        {"wangyang", 4, 8, bkp_wangyang_series}, {"embedded", 4, 8, bkp_embedded_series},
        {"wangyang", 5, 7, bkp_wangyang_series},
    };
    bool all_same = true;
    for (const Case& c : cases) {
        LaurentSeries s(c.n, Window::uniform(c.n, 0, 0)), p = s;
        const double ts = seconds([&] { s = c.eval(b, c.n, c.w, {0, Execution::Serial}); });
        const double tp = seconds([&] { p = c.eval(b, c.n, c.w, {0, Execution::Parallel}); });
        const bool same = s == p;
        all_same = all_same && same;
        std::printf("%-10s %2d %2d %10.3f %10.3f %8.2f %s\n", c.name, c.n, c.w, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    return all_same ? 0 : 1;
}
