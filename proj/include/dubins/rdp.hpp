#pragma once
/**
 * @file   rdp.hpp
 * @brief  Relaxed Dubins problem: shortest path from z0 to a point, free heading.
 *
 * The optimum is one of RS, LS, RL, LR or a substring. Each candidate is built
 * from circle tangency geometry and the shortest one wins. Its length is the
 * function F used throughout the intercept solver.
 */

#include <optional>
#include <vector>

#include "dubins/family.hpp"
#include "dubins/geometry.hpp"
#include "dubins/region.hpp"

namespace dubins {

struct RdpSolution {
    double length{0.0};
    DubinsPath path;
    Family family{Family::Null};
};

/// Arc on the initial `turn` circle followed by a forward tangent line to p.
/// Empty when p lies strictly inside that circle.
[[nodiscard]] std::optional<DubinsPath> turn_then_straight(Point p, double rho, SegmentKind turn);

/// The (up to two) L_u R_w paths from z0 through p. u is the first-arc angle,
/// which is also the polar angle of the second circle's center about c_l.
/// Ordered by increasing u relative to the polar angle of p about c_l
/// (the alpha- branch first). Empty unless rho <= |p - c_l| <= 3 rho, with the
/// bounds widened by `slack * rho` for points known to sit on the boundary.
[[nodiscard]] std::vector<DubinsPath> left_right_paths(Point p, double rho, double slack = 0.0);

/// Mirror image of left_right_paths: R_u L_w paths through p.
[[nodiscard]] std::vector<DubinsPath> right_left_paths(Point p, double rho);

/// Shortest free-heading path from z0 to p. Throws std::invalid_argument for rho <= 0.
[[nodiscard]] RdpSolution solve_rdp(Point p, double rho);

/// F[x, y].
[[nodiscard]] inline double rdp_length(Point p, double rho) { return solve_rdp(p, rho).length; }

} // namespace dubins
