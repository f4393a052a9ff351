#pragma once

// One harness for every counting kernel: sum a per-item BigNat contribution
// over [0, count). jobs <= 1 runs the plain serial loop; jobs > 1 splits the
// index range across OpenMP threads. Partial sums are combined in thread
// order, and since the terms are exact naturals under a commutative
// associative sum, the result is bit-identical to the serial loop.

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "altcount/bigint.hpp"

namespace altcount::oracle {

template <typename TermFn>
BigNat parallel_sum(std::size_t count, int jobs, TermFn&& term) {
#ifdef _OPENMP
    if (jobs > 1 && count > 1) {
        const int threads = static_cast<int>(std::min<std::size_t>(count, jobs));
        std::vector<BigNat> partial(static_cast<std::size_t>(threads), BigNat(0));
#pragma omp parallel num_threads(threads)
        {
            const int t = omp_get_thread_num();
            BigNat local = 0;
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(count); ++i)
                local += term(static_cast<std::size_t>(i));
            partial[static_cast<std::size_t>(t)] = std::move(local);
        }
        BigNat total = 0;
        for (const BigNat& v : partial)
            total += v;
        return total;
    }
#else
    (void)jobs;
#endif
    BigNat total = 0;
    for (std::size_t i = 0; i < count; ++i)
        total += term(i);
    return total;
}

// Number of workers meant by a jobs setting: 0 picks the hardware default.
int resolve_jobs(int jobs);

} // namespace altcount::oracle
