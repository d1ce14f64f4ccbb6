#pragma once
// Shortest path to a fixed point in a constant drift field (wind or current).
// Relative to the moving air mass the vehicle is an ordinary Dubins vehicle and
// the goal drifts with velocity -wind, so the problem is an intercept with
// p0 = terminal and v = -wind.

#include <vector>

#include "dubins/geometry.hpp"
#include "dubins/intercept.hpp"

namespace dubins {

struct DriftSolution {
    InterceptSolution solution;
    /// Air-frame rollout shifted by wind * t.
    std::vector<TrajectorySample> ground_track;
    Point ground_endpoint;
};

[[nodiscard]] TargetMotion drift_as_target(Point terminal, Point wind);

/// Throws std::invalid_argument for |wind| >= 1 or rho <= 0.
/// sample_dt <= 0 selects rho / 100.
[[nodiscard]] DriftSolution solve_drift(Point terminal, Point wind, double rho, double sample_dt = 0.0);

} // namespace dubins
