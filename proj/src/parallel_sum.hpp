#pragma once

#include <exception>

#include "bkp/exact_series.hpp"

namespace bkp::detail {

enum class Mode { Serial, Parallel };

// Sums job(0..count-1). The parallel branch gives every thread its own
// accumulator; exact addition makes the merge order irrelevant.
template <class Job>
LaurentSeries sum_terms(int count, const Job& job, int n_vars, const Window& target, Mode mode) {
    LaurentSeries total(n_vars, target);
    if (mode == Mode::Serial) {
        for (int i = 0; i < count; ++i) total += job(i);
        return total;
    }
    std::exception_ptr failure;
#pragma omp parallel
    {
        LaurentSeries local(n_vars, target);
#pragma omp for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                local += job(i);
            } catch (...) {
#pragma omp critical(bkp_sum_failure)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(bkp_sum_merge)
        total += local;
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

}  // namespace bkp::detail
