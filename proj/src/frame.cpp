#include "dubins/frame.hpp"

#include <stdexcept>

namespace dubins {

Frame::Frame(Configuration start, double speed) : start_(start), speed_(speed) {
    if (!(speed > 0.0) || !std::isfinite(speed)) {
        throw std::invalid_argument("Frame: pursuer speed must be positive");
    }
    // Rotation taking the start heading onto +y.
    const double phi = kHalfPi - start.theta();
    cos_ = std::cos(phi);
    sin_ = std::sin(phi);
}

Point Frame::rotate_to_canonical(Point v) const noexcept {
    return {cos_ * v.x - sin_ * v.y, sin_ * v.x + cos_ * v.y};
}

Point Frame::rotate_to_world(Point v) const noexcept {
    return {cos_ * v.x + sin_ * v.y, -sin_ * v.x + cos_ * v.y};
}

Point Frame::to_canonical(Point world) const noexcept { return rotate_to_canonical(world - start_.position()); }

Point Frame::to_world(Point canonical) const noexcept { return start_.position() + rotate_to_world(canonical); }

Point Frame::velocity_to_canonical(Point world_velocity) const noexcept {
    return (1.0 / speed_) * rotate_to_canonical(world_velocity);
}

Point Frame::velocity_to_world(Point canonical_velocity) const noexcept {
    return speed_ * rotate_to_world(canonical_velocity);
}

Configuration Frame::to_world(const Configuration& canonical) const noexcept {
    return {to_world(canonical.position()), canonical.theta() - (kHalfPi - start_.theta())};
}

TrajectorySample Frame::to_world(const TrajectorySample& canonical) const noexcept {
    const Configuration c = to_world(Configuration(canonical.x, canonical.y, canonical.theta));
    return {time_to_world(canonical.t), c.x(), c.y(), c.theta(), canonical.u};
}

} // namespace dubins
