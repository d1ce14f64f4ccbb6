#pragma once

#include <cstdint>
#include <string_view>

#include "dubins/geometry.hpp"

namespace dubins {

/// Path type tags. The elongated variants mark CC paths whose length equals
/// L- or L+ at the terminal rather than the RDP length F.
enum class Family : std::uint8_t {
    Null,
    S,
    L,
    R,
    LS,
    RS,
    LR,
    RL,
    LminusR,
    LplusR,
    RminusL,
    RplusL,
};

[[nodiscard]] std::string_view to_string(Family f) noexcept;

/// Reflection across the y axis swaps every L and R.
[[nodiscard]] Family mirror(Family f) noexcept;

/// Family read off the segment kinds of a path (never an elongated variant).
[[nodiscard]] Family family_of(const DubinsPath& path) noexcept;

[[nodiscard]] int segment_count(Family f) noexcept;

/// True when the path is of type RS, LS, LR, RL or a substring of one.
[[nodiscard]] bool in_sufficient_family(const DubinsPath& path) noexcept;

} // namespace dubins
