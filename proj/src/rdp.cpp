#include "dubins/rdp.hpp"

#include <algorithm>
#include <stdexcept>

namespace dubins {
namespace {

// Rounding can turn an exact zero-angle turn into 2pi - eps; a full extra
// loop is never intended by these constructions.
constexpr double kWrapSnap = 1e-10;

double snap_full_turn(double a) noexcept { return a > kTwoPi - kWrapSnap ? 0.0 : a; }

DubinsPath right_then_straight(Point p, double rho) {
    const Point q = p - right_center(rho);
    const double q2 = dot(q, q);
    const double d = std::sqrt(std::max(q2 - rho * rho, 0.0));
    // With heading direction at angle psi, q = e^{i psi} (d + i rho).
    const double psi = std::atan2(q.y, q.x) - std::atan2(rho, d);
    const double phi = snap_full_turn(normalize_angle(kHalfPi - psi));
    return DubinsPath(Configuration::origin(), {Segment(SegmentKind::RightArc, phi), Segment(SegmentKind::Line, d)},
                      rho);
}

} // namespace

std::optional<DubinsPath> turn_then_straight(Point p, double rho, SegmentKind turn) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("turn_then_straight: rho must be positive");
    }
    if (turn == SegmentKind::Line) {
        throw std::invalid_argument("turn_then_straight: turn must be an arc");
    }
    const Point local = turn == SegmentKind::RightArc ? p : mirror(p);
    if (distance(local, right_center(rho)) < rho) {
        return std::nullopt;
    }
    DubinsPath path = right_then_straight(local, rho);
    return turn == SegmentKind::RightArc ? path : path.mirrored();
}

std::vector<DubinsPath> left_right_paths(Point p, double rho, double slack) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("left_right_paths: rho must be positive");
    }
    std::vector<DubinsPath> out;
    const Point cl = left_center(rho);
    const Point q = p - cl;
    const double s = norm(q);
    if (s < rho * (1.0 - slack) || s > rho * (3.0 + slack)) {
        return out;
    }
    // Second circle center lies 2 rho from c_l and rho from p.
    const double cos_gamma = std::clamp((3.0 * rho * rho + s * s) / (4.0 * rho * s), -1.0, 1.0);
    const double gamma = std::acos(cos_gamma);
    const double xi = std::atan2(q.y, q.x);
    for (const double u_raw : {xi - gamma, xi + gamma}) {
        const double u = snap_full_turn(normalize_angle(u_raw));
        const Point c2 = cl + 2.0 * rho * Point{std::cos(u), std::sin(u)};
        const double w = snap_full_turn(normalize_angle(u + kPi - std::atan2(p.y - c2.y, p.x - c2.x)));
        out.emplace_back(Configuration::origin(),
                         std::initializer_list<Segment>{Segment(SegmentKind::LeftArc, u),
                                                        Segment(SegmentKind::RightArc, w)},
                         rho);
    }
    return out;
}

std::vector<DubinsPath> right_left_paths(Point p, double rho) {
    std::vector<DubinsPath> out = left_right_paths(mirror(p), rho);
    for (DubinsPath& path : out) {
        path = path.mirrored();
    }
    return out;
}

RdpSolution solve_rdp(Point p, double rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("solve_rdp: rho must be positive");
    }
    RdpSolution best{0.0, DubinsPath(Configuration::origin(), rho), Family::Null};
    if (norm(p) <= kAngleTol * rho) {
        return best;
    }
    bool have = false;
    auto consider = [&](const DubinsPath& path) {
        const double len = path.length();
        if (!have || len < best.length) {
            best = {len, path, family_of(path)};
            have = true;
        }
    };
    for (const SegmentKind turn : {SegmentKind::RightArc, SegmentKind::LeftArc}) {
        if (auto path = turn_then_straight(p, rho, turn)) {
            consider(*path);
        }
    }
    for (const DubinsPath& path : left_right_paths(p, rho)) {
        consider(path);
    }
    for (const DubinsPath& path : right_left_paths(p, rho)) {
        consider(path);
    }
    return best;
}

} // namespace dubins
