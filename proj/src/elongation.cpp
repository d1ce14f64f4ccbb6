#include "dubins/elongation.hpp"

#include <stdexcept>

#include "dubins/rdp.hpp"
#include "dubins/region.hpp"

namespace dubins {
namespace {

constexpr double kBoundaryTol = 1e-9;

} // namespace

ElongationPair elongation(Point p, double rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("elongation: rho must be positive");
    }
    if (p.x < -kBoundaryTol * rho || !near_r3_closure(p, rho, kBoundaryTol)) {
        throw std::domain_error("elongation: point is not in R3 with x >= 0");
    }
    const std::vector<DubinsPath> paths = left_right_paths(p, rho, kBoundaryTol);
    if (paths.size() != 2) {
        throw std::domain_error("elongation: no tangent circles through the point");
    }
    ElongationPair out;
    out.xi = std::atan2(p.y, p.x + rho);
    out.minus_path = paths[0];
    out.plus_path = paths[1];
    auto first_arc = [](const DubinsPath& path) {
        const auto& segs = path.segments();
        return !segs.empty() && segs.front().kind == SegmentKind::LeftArc ? segs.front().magnitude : 0.0;
    };
    out.alpha_minus = first_arc(out.minus_path);
    out.alpha_plus = first_arc(out.plus_path);
    out.l_minus = out.minus_path.length();
    out.l_plus = out.plus_path.length();
    const double s = distance(p, left_center(rho));
    if (std::abs(s - 3.0 * rho) <= kBoundaryTol * rho) {
        out.degenerate = true;
        out.l_plus = out.l_minus;
        out.plus_path = out.minus_path;
        out.alpha_plus = out.alpha_minus;
    }
    return out;
}

ElongationPair elongation_any_side(Point p, double rho) {
    if (p.x >= 0.0) {
        return elongation(p, rho);
    }
    ElongationPair e = elongation(mirror(p), rho);
    e.minus_path = e.minus_path.mirrored();
    e.plus_path = e.plus_path.mirrored();
    return e;
}

bool feasible_length(Point p, double rho, double L) {
    const double f = rdp_length(p, rho);
    if (L < f) {
        return false;
    }
    // The gap rule also holds on the boundary of R3, including the upper arcs
    // of C_r and C_l that the closed-disk classification files under R2.
    if (!near_r3_closure(p, rho, kBoundaryTol)) {
        return true;
    }
    try {
        const ElongationPair e = elongation_any_side(p, rho);
        return L <= e.l_minus || L >= e.l_plus;
    } catch (const std::domain_error&) {
        return true;
    }
}

} // namespace dubins
