#include "dubins/region.hpp"

#include <stdexcept>

namespace dubins {

std::string_view to_string(RegionTag t) noexcept {
    switch (t) {
    case RegionTag::R1: return "R1";
    case RegionTag::R2: return "R2";
    case RegionTag::R3: return "R3";
    }
    return "?";
}

std::string_view to_string(Side s) noexcept {
    switch (s) {
    case Side::RightHalf: return "right";
    case Side::LeftHalf: return "left";
    case Side::Axis: return "axis";
    }
    return "?";
}

Region classify_region(Point p, double rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("classify_region: rho must be positive");
    }
    const Side side = p.x > 0.0 ? Side::RightHalf : (p.x < 0.0 ? Side::LeftHalf : Side::Axis);
    const double dr = distance(p, right_center(rho));
    const double dl = distance(p, left_center(rho));
    if (dr <= rho || dl <= rho) {
        return {RegionTag::R2, side};
    }
    if (p.y > 0.0 && dr <= 3.0 * rho && dl <= 3.0 * rho) {
        return {RegionTag::R3, side};
    }
    return {RegionTag::R1, side};
}

bool near_r3_closure(Point p, double rho, double tol) noexcept {
    const double eps = tol * rho;
    const double dr = distance(p, right_center(rho));
    const double dl = distance(p, left_center(rho));
    return p.y >= -eps && dr <= 3.0 * rho + eps && dl <= 3.0 * rho + eps && dr >= rho - eps && dl >= rho - eps;
}

bool in_r3_interior(Point p, double rho, double tol) noexcept {
    const double eps = tol * rho;
    const double dr = distance(p, right_center(rho));
    const double dl = distance(p, left_center(rho));
    return p.y > eps && dr < 3.0 * rho - eps && dl < 3.0 * rho - eps && dr > rho + eps && dl > rho + eps;
}

} // namespace dubins
