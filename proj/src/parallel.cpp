#include "cnpkit/parallel.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cnpkit {

void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            try {
                body(static_cast<std::size_t>(k));
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            try {
                body(static_cast<std::size_t>(k));
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

int worker_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace cnpkit
