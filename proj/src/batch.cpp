#include "dubins/batch.hpp"

#include <limits>

#include "dubins/oracle.hpp"

namespace dubins {
namespace {

BatchResult solve_one(const TargetMotion& m, double rho) {
    BatchResult r;
    try {
        r.solution = solve_mtip(m, rho);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

} // namespace

std::vector<BatchResult> solve_batch(std::span<const TargetMotion> instances, double rho) {
    std::vector<BatchResult> out;
    out.reserve(instances.size());
    for (const TargetMotion& m : instances) {
        out.push_back(solve_one(m, rho));
    }
    return out;
}

std::vector<BatchResult> solve_batch_parallel(std::span<const TargetMotion> instances, double rho) {
    std::vector<BatchResult> out(instances.size());
    const long n = static_cast<long>(instances.size());
#if defined(DUBINS_INTERCEPT_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = solve_one(instances[static_cast<std::size_t>(i)], rho);
    }
    return out;
}

std::vector<double> oracle_batch(std::span<const TargetMotion> instances, double rho) {
    std::vector<double> out(instances.size(), std::numeric_limits<double>::quiet_NaN());
    const long n = static_cast<long>(instances.size());
#if defined(DUBINS_INTERCEPT_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = mtip_oracle(instances[static_cast<std::size_t>(i)], rho);
        } catch (const std::exception&) {
        }
    }
    return out;
}

} // namespace dubins
