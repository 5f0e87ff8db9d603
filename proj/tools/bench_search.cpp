// Times the parallel kernels against their serial reference implementations.
// Both must return identical results; timings are reported in integer
// milliseconds so the output stays free of fractional formatting.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ptelab/matrix_model.hpp"
#include "ptelab/pte.hpp"

#ifdef PTELAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

int run_bench(int scale) {
    using namespace ptelab;

#ifdef PTELAB_HAVE_OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif

    {
        // Brute-force equal-power-sum search. scale=1 keeps this under a
        // second on one core; each extra step roughly doubles the work.
        int size = 3;
        int degree = 2;
        int bound = 4 + scale;
        pte::SearchOptions opts;
        opts.max_candidates = 500'000'000ULL;

        auto t0 = Clock::now();
        auto serial = pte::brute_search_serial(size, degree, bound, opts);
        auto serial_ms = ms_since(t0);

        auto t1 = Clock::now();
        auto parallel = pte::brute_search(size, degree, bound, opts);
        auto parallel_ms = ms_since(t1);

        if (serial != parallel) {
            std::cerr << "brute_search: serial and parallel results differ\n";
            return 1;
        }
        std::cout << "brute_search size=" << size << " degree=" << degree
                  << " bound=" << bound << ": serial " << serial_ms << " ms, parallel "
                  << parallel_ms << " ms, " << serial.size() << " classes\n";
    }

    {
        // Casimir contraction on a wedge representation. The index-tuple count
        // grows like n^p, so scale bumps n.
        int n = 4 + (scale > 1 ? 1 : 0);
        int k = 2;
        int p = 3;

        auto rep = matmodel::fundamental_rep(n, k);

        auto t0 = Clock::now();
        auto serial = matmodel::casimir_serial(rep, p, p);
        auto serial_ms = ms_since(t0);

        auto t1 = Clock::now();
        auto parallel = matmodel::casimir(rep, p, p);
        auto parallel_ms = ms_since(t1);

        if (!(serial == parallel)) {
            std::cerr << "casimir: serial and parallel results differ\n";
            return 1;
        }
        std::cout << "casimir n=" << n << " k=" << k << " p=" << p << ": serial "
                  << serial_ms << " ms, parallel " << parallel_ms << " ms\n";
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    int scale = 1;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--scale" && i + 1 < argc) {
            scale = std::atoi(argv[++i]);
        } else if (arg.rfind("--scale=", 0) == 0) {
            scale = std::atoi(arg.c_str() + 8);
        } else {
            std::cerr << "usage: bench_search [--scale N]\n";
            return 2;
        }
    }
    if (scale < 1) scale = 1;
    try {
        return run_bench(scale);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
