#pragma once
/**
 * @file   geometry.hpp
 * @brief  Planar types, two-segment Dubins paths and exact kinematic rollout.
 *
 * All solver math runs in the normalized frame: unit pursuer speed and start
 * configuration (0, 0, pi/2). Arbitrary start poses are mapped into that
 * frame by frame.hpp.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace dubins {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Absolute tolerance for angle equality and for dropping empty segments.
inline constexpr double kAngleTol = 1e-12;

/// Wraps an angle into [0, 2pi).
[[nodiscard]] double normalize_angle(double a) noexcept;

struct Point {
    double x{0.0};
    double y{0.0};

    friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Point operator*(Point a, double s) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) noexcept = default;
};

[[nodiscard]] inline double norm(Point p) noexcept { return std::hypot(p.x, p.y); }
[[nodiscard]] inline double distance(Point a, Point b) noexcept { return norm(a - b); }
[[nodiscard]] constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
/// Reflection across the y axis.
[[nodiscard]] constexpr Point mirror(Point p) noexcept { return {-p.x, p.y}; }

/// Pose of the pursuer; heading is kept in [0, 2pi).
class Configuration {
  public:
    constexpr Configuration() noexcept = default;
    Configuration(double x, double y, double theta) noexcept : x_(x), y_(y), theta_(normalize_angle(theta)) {}
    Configuration(Point p, double theta) noexcept : Configuration(p.x, p.y, theta) {}

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }
    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] Point position() const noexcept { return {x_, y_}; }

    /// The normalized start configuration z0 = (0, 0, pi/2).
    [[nodiscard]] static Configuration origin() noexcept { return {0.0, 0.0, kHalfPi}; }

  private:
    double x_{0.0};
    double y_{0.0};
    double theta_{0.0};
};

/// Constant-velocity target. Speed is in units of the pursuer speed and must be < 1.
class TargetMotion {
  public:
    TargetMotion(Point p0, Point velocity);

    [[nodiscard]] Point initial_position() const noexcept { return p0_; }
    [[nodiscard]] Point velocity() const noexcept { return v_; }
    [[nodiscard]] double speed() const noexcept { return norm(v_); }

    /// E(t) = p0 + v t. Throws std::domain_error for t < 0.
    [[nodiscard]] Point position(double t) const;

    /// Same motion reflected across the y axis.
    [[nodiscard]] TargetMotion mirrored() const { return {mirror(p0_), mirror(v_)}; }

  private:
    Point p0_;
    Point v_;
};

[[nodiscard]] inline Point target_position(const TargetMotion& m, double t) { return m.position(t); }

enum class SegmentKind : std::uint8_t { LeftArc, RightArc, Line };

[[nodiscard]] std::string_view to_string(SegmentKind k) noexcept;
[[nodiscard]] constexpr SegmentKind mirror(SegmentKind k) noexcept {
    switch (k) {
    case SegmentKind::LeftArc: return SegmentKind::RightArc;
    case SegmentKind::RightArc: return SegmentKind::LeftArc;
    default: return SegmentKind::Line;
    }
}
/// Control value u for a segment kind: +1 left, -1 right, 0 straight.
[[nodiscard]] constexpr int control_of(SegmentKind k) noexcept {
    return k == SegmentKind::LeftArc ? 1 : (k == SegmentKind::RightArc ? -1 : 0);
}

/// One path piece. Arcs carry radians in [0, 2pi], lines carry a length.
struct Segment {
    SegmentKind kind{SegmentKind::Line};
    double magnitude{0.0};

    Segment() = default;
    Segment(SegmentKind k, double m);

    [[nodiscard]] bool is_arc() const noexcept { return kind != SegmentKind::Line; }
    [[nodiscard]] double length(double rho) const noexcept { return is_arc() ? rho * magnitude : magnitude; }
};

/// Closed-form pose after traversing `seg` from `from` with turning radius `rho`.
[[nodiscard]] Configuration advance(const Configuration& from, const Segment& seg, double rho) noexcept;

/// Pose after travelling `s` (0 <= s <= seg length) along `seg`.
[[nodiscard]] Configuration advance_partial(const Configuration& from, const Segment& seg, double rho,
                                            double s) noexcept;

/// A path of at most two segments with distinct consecutive kinds.
class DubinsPath {
  public:
    /// Empty path (family Null) at the given start.
    explicit DubinsPath(Configuration start = Configuration::origin(), double rho = 1.0);

    /// Zero-magnitude segments are dropped and equal neighbours merged.
    /// Throws std::invalid_argument for rho <= 0, more than two remaining
    /// segments, or a merged arc exceeding 2pi.
    DubinsPath(Configuration start, std::span<const Segment> segments, double rho);
    DubinsPath(Configuration start, std::initializer_list<Segment> segments, double rho)
        : DubinsPath(start, std::span<const Segment>(segments.begin(), segments.size()), rho) {}

    [[nodiscard]] const Configuration& start() const noexcept { return start_; }
    [[nodiscard]] const std::vector<Segment>& segments() const noexcept { return segments_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }
    [[nodiscard]] double length() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return segments_.empty(); }

    /// Path reflected across the y axis, with left and right arcs swapped.
    [[nodiscard]] DubinsPath mirrored() const;

  private:
    Configuration start_;
    std::vector<Segment> segments_;
    double rho_{1.0};
};

struct TrajectorySample {
    double t{0.0};
    double x{0.0};
    double y{0.0};
    double theta{0.0};
    int u{0};
};

struct Rollout {
    Configuration terminal;
    std::vector<TrajectorySample> samples;
};

/// Exact terminal configuration of a path.
[[nodiscard]] Configuration terminal_configuration(const DubinsPath& path) noexcept;

/// Pose at arc length `s` along the path, clamped to [0, length].
[[nodiscard]] TrajectorySample sample_at(const DubinsPath& path, double s) noexcept;

/// Terminal configuration plus samples at t = 0, dt, 2dt, ... and the final time.
/// Throws std::invalid_argument for dt <= 0.
[[nodiscard]] Rollout rollout(const DubinsPath& path, double dt);

} // namespace dubins
