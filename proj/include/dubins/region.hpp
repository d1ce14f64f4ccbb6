#pragma once
// Partition of the normalized plane into R1 / R2 / R3.
//
//   R2 = D_r u D_l                         (closed unit-radius turning disks)
//   R3 = {y > 0, inside both 3rho disks about c_r, c_l} \ (R2 n {y > 0})
//   R1 = everything else
//
// Boundary points resolve by closed-set membership in the order R2, R3, R1.

#include <cstdint>
#include <string_view>

#include "dubins/geometry.hpp"

namespace dubins {

enum class RegionTag : std::uint8_t { R1, R2, R3 };
enum class Side : std::uint8_t { RightHalf, LeftHalf, Axis };

struct Region {
    RegionTag tag{RegionTag::R1};
    Side side{Side::Axis};

    friend constexpr bool operator==(Region, Region) noexcept = default;
};

[[nodiscard]] std::string_view to_string(RegionTag t) noexcept;
[[nodiscard]] std::string_view to_string(Side s) noexcept;

/// Centers of the initial right / left turning circles, (+rho, 0) and (-rho, 0).
[[nodiscard]] constexpr Point right_center(double rho) noexcept { return {rho, 0.0}; }
[[nodiscard]] constexpr Point left_center(double rho) noexcept { return {-rho, 0.0}; }

/// Throws std::invalid_argument for rho <= 0.
[[nodiscard]] Region classify_region(Point p, double rho);

/// True when p lies in the closure of R3 grown by `tol` (scaled by rho).
/// Its complement is the interior of R1 u R2, where the RDP fixed-point law applies.
[[nodiscard]] bool near_r3_closure(Point p, double rho, double tol = 1e-9) noexcept;

/// True when p is at least `tol * rho` away from every boundary of R3.
[[nodiscard]] bool in_r3_interior(Point p, double rho, double tol = 1e-9) noexcept;

} // namespace dubins
