#pragma once
// Rigid transform + time scaling between a world frame and the normalized
// solver frame (start at the origin heading +y, unit pursuer speed).

#include "dubins/geometry.hpp"

namespace dubins {

class Frame {
  public:
    /// Throws std::invalid_argument for speed <= 0.
    explicit Frame(Configuration start = Configuration::origin(), double speed = 1.0);

    [[nodiscard]] const Configuration& start() const noexcept { return start_; }
    [[nodiscard]] double speed() const noexcept { return speed_; }

    [[nodiscard]] Point to_canonical(Point world) const noexcept;
    [[nodiscard]] Point to_world(Point canonical) const noexcept;

    /// World velocity -> canonical velocity per unit of pursuer path length.
    [[nodiscard]] Point velocity_to_canonical(Point world_velocity) const noexcept;
    [[nodiscard]] Point velocity_to_world(Point canonical_velocity) const noexcept;

    [[nodiscard]] Configuration to_world(const Configuration& canonical) const noexcept;
    [[nodiscard]] TrajectorySample to_world(const TrajectorySample& canonical) const noexcept;

    /// Canonical time is path length; world time is length / speed.
    [[nodiscard]] double time_to_world(double canonical_time) const noexcept { return canonical_time / speed_; }

  private:
    [[nodiscard]] Point rotate_to_canonical(Point v) const noexcept;
    [[nodiscard]] Point rotate_to_world(Point v) const noexcept;

    Configuration start_;
    double speed_;
    double cos_{1.0};
    double sin_{0.0};
};

} // namespace dubins
