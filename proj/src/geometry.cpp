#include "dubins/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace dubins {

double normalize_angle(double a) noexcept {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative can round back up to exactly 2pi.
    return r >= kTwoPi ? 0.0 : r;
}

TargetMotion::TargetMotion(Point p0, Point velocity) : p0_(p0), v_(velocity) {
    if (!std::isfinite(p0.x) || !std::isfinite(p0.y) || !std::isfinite(velocity.x) || !std::isfinite(velocity.y)) {
        throw std::invalid_argument("TargetMotion: non-finite input");
    }
    if (!(norm(velocity) < 1.0)) {
        throw std::invalid_argument("TargetMotion: target speed must be below the pursuer speed");
    }
}

Point TargetMotion::position(double t) const {
    if (t < 0.0) {
        throw std::domain_error("TargetMotion::position: negative time");
    }
    return p0_ + t * v_;
}

std::string_view to_string(SegmentKind k) noexcept {
    switch (k) {
    case SegmentKind::LeftArc: return "L";
    case SegmentKind::RightArc: return "R";
    case SegmentKind::Line: return "S";
    }
    return "?";
}

Segment::Segment(SegmentKind k, double m) : kind(k), magnitude(m) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
        throw std::invalid_argument("Segment: magnitude must be finite and non-negative");
    }
    if (k != SegmentKind::Line && m > kTwoPi + kAngleTol) {
        throw std::invalid_argument("Segment: arc exceeds one full turn");
    }
}

Configuration advance_partial(const Configuration& from, const Segment& seg, double rho, double s) noexcept {
    const double th = from.theta();
    switch (seg.kind) {
    case SegmentKind::Line:
        return {from.x() + s * std::cos(th), from.y() + s * std::sin(th), th};
    case SegmentKind::LeftArc: {
        const double th1 = th + s / rho;
        return {from.x() + rho * (std::sin(th1) - std::sin(th)), from.y() + rho * (std::cos(th) - std::cos(th1)), th1};
    }
    case SegmentKind::RightArc: {
        const double th1 = th - s / rho;
        return {from.x() + rho * (std::sin(th) - std::sin(th1)), from.y() + rho * (std::cos(th1) - std::cos(th)), th1};
    }
    }
    return from;
}

Configuration advance(const Configuration& from, const Segment& seg, double rho) noexcept {
    return advance_partial(from, seg, rho, seg.length(rho));
}

DubinsPath::DubinsPath(Configuration start, double rho) : start_(start), rho_(rho) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("DubinsPath: rho must be positive");
    }
}

DubinsPath::DubinsPath(Configuration start, std::span<const Segment> segments, double rho)
    : DubinsPath(start, rho) {
    for (const Segment& s : segments) {
        const double tol = s.is_arc() ? kAngleTol : kAngleTol * rho;
        if (s.magnitude <= tol) {
            continue;
        }
        if (!segments_.empty() && segments_.back().kind == s.kind) {
            segments_.back() = Segment(s.kind, segments_.back().magnitude + s.magnitude);
            continue;
        }
        segments_.push_back(s);
    }
    if (segments_.size() > 2) {
        throw std::invalid_argument("DubinsPath: at most two segments are supported");
    }
}

double DubinsPath::length() const noexcept {
    double total = 0.0;
    for (const Segment& s : segments_) {
        total += s.length(rho_);
    }
    return total;
}

DubinsPath DubinsPath::mirrored() const {
    std::vector<Segment> segs;
    segs.reserve(segments_.size());
    for (const Segment& s : segments_) {
        segs.emplace_back(mirror(s.kind), s.magnitude);
    }
    const Configuration start(-start_.x(), start_.y(), kPi - start_.theta());
    return {start, segs, rho_};
}

Configuration terminal_configuration(const DubinsPath& path) noexcept {
    Configuration c = path.start();
    for (const Segment& s : path.segments()) {
        c = advance(c, s, path.rho());
    }
    return c;
}

TrajectorySample sample_at(const DubinsPath& path, double s) noexcept {
    s = std::max(0.0, s);
    Configuration c = path.start();
    int u = 0;
    double walked = 0.0;
    const auto& segs = path.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const double len = segs[i].length(path.rho());
        u = control_of(segs[i].kind);
        if (s < walked + len || i + 1 == segs.size()) {
            c = advance_partial(c, segs[i], path.rho(), std::min(s - walked, len));
            return {s, c.x(), c.y(), c.theta(), u};
        }
        c = advance(c, segs[i], path.rho());
        walked += len;
    }
    return {0.0, c.x(), c.y(), c.theta(), u};
}

Rollout rollout(const DubinsPath& path, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rollout: sample step must be positive");
    }
    Rollout out{terminal_configuration(path), {}};
    const double total = path.length();
    // Stop short of the end so the closed-form terminal sample is not duplicated.
    const double stop = total - 1e-9 * dt;
    for (std::size_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (t >= stop) {
            break;
        }
        out.samples.push_back(sample_at(path, t));
    }
    TrajectorySample last{total, out.terminal.x(), out.terminal.y(), out.terminal.theta(), 0};
    if (!path.empty()) {
        last.u = control_of(path.segments().back().kind);
    }
    out.samples.push_back(last);
    return out;
}

} // namespace dubins
