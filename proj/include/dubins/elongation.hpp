#pragma once
/**
 * @file   elongation.hpp
 * @brief  L- / L+ bounds for terminal points in R3.
 *
 * For p in R3 with x >= 0 there are two circles of radius rho through p that
 * are tangent to the initial left circle. Arcs on C_l followed by arcs on those
 * circles give two LR paths, L_{alpha-}R and L_{alpha+}R. Their lengths bound
 * the open gap (L-, L+) of path lengths that cannot reach p.
 */

#include "dubins/geometry.hpp"

namespace dubins {

struct ElongationPair {
    double l_minus{0.0};
    double l_plus{0.0};
    double alpha_minus{0.0};
    double alpha_plus{0.0};
    /// Polar angle of p about c_l.
    double xi{0.0};
    /// The two tangent circles coincide (|p - c_l| = 3 rho); then l_minus == l_plus.
    bool degenerate{false};
    DubinsPath minus_path;
    DubinsPath plus_path;
};

/// Requires p in the closure of R3 with x >= 0 (tolerance 1e-9 rho).
/// Throws std::domain_error otherwise.
[[nodiscard]] ElongationPair elongation(Point p, double rho);

/// Any side of the axis: points with x < 0 are mirrored, solved, and the
/// returned paths mirrored back (they become R_{alpha}L paths).
[[nodiscard]] ElongationPair elongation_any_side(Point p, double rho);

/// Whether some feasible Dubins path of length L runs from z0 to p.
/// On the closure of R3: L in [F, L-] u [L+, inf). Elsewhere: L >= F.
[[nodiscard]] bool feasible_length(Point p, double rho, double L);

} // namespace dubins
