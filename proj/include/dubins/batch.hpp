#pragma once
// Many independent intercept instances. Results come back in input order.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dubins/intercept.hpp"

namespace dubins {

struct BatchResult {
    std::optional<InterceptSolution> solution;
    std::string error;
};

[[nodiscard]] std::vector<BatchResult> solve_batch(std::span<const TargetMotion> instances, double rho);

/// OpenMP variant; identical output to solve_batch.
[[nodiscard]] std::vector<BatchResult> solve_batch_parallel(std::span<const TargetMotion> instances, double rho);

/// Oracle times for each instance (default config), NaN where the scan fails.
[[nodiscard]] std::vector<double> oracle_batch(std::span<const TargetMotion> instances, double rho);

} // namespace dubins
