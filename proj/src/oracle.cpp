#include "dubins/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "dubins/elongation.hpp"
#include "dubins/rdp.hpp"

#if defined(DUBINS_INTERCEPT_HAVE_OPENMP)
#include <omp.h>
#endif

namespace dubins {
namespace {

constexpr int kMaxDoublings = 8;
constexpr long kWave = 4096;
constexpr double kWindowProbe = 1e-9;

bool feasible_at(const TargetMotion& m, double rho, double t) { return feasible_length(m.position(t), rho, t); }

double refine(const TargetMotion& m, double rho, double lo, double hi, int iters) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(m, rho, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

void check_config(const OracleConfig& cfg) {
    if (!(cfg.grid_step > 0.0) || !(cfg.t_max > 0.0) || cfg.refine_iters < 0) {
        throw std::invalid_argument("oracle: grid_step and t_max must be positive");
    }
}

double lag(const TargetMotion& m, double rho, double t) { return t - rdp_length(m.position(t), rho); }

// Earliest feasible time inside the grid cell ((k-1) h, k h], given that the
// left end is infeasible. Besides the right end, a cell can hide a window
// [F, L-] narrower than h right after t catches up with F[E(t)].
std::optional<double> cell_hit(const TargetMotion& m, double rho, double h, long k, int iters) {
    const double lo = static_cast<double>(k - 1) * h;
    const double hi = static_cast<double>(k) * h;
    if (feasible_at(m, rho, hi)) {
        return refine(m, rho, lo, hi, iters);
    }
    double a = lo;
    double b = hi;
    if (!(lag(m, rho, a) < 0.0 && lag(m, rho, b) >= 0.0)) {
        return std::nullopt;
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (a + b);
        if (lag(m, rho, mid) < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    // The crossing can sit exactly on C_r, where F jumps and the closed-disk
    // rule admits an isolated point; a real window survives a small step.
    const double probe = b + kWindowProbe * std::max(1.0, b);
    if (feasible_at(m, rho, b) && feasible_at(m, rho, probe)) {
        return b;
    }
    return std::nullopt;
}

std::optional<double> first_hit(const TargetMotion& m, double rho, double h, long begin, long end, int iters) {
    for (long k = begin; k < end; ++k) {
        if (auto t = cell_hit(m, rho, h, k, iters)) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<double> first_hit_parallel(const TargetMotion& m, double rho, double h, long begin, long end,
                                         int iters) {
    for (long lo = begin; lo < end; lo += kWave) {
        const long hi = std::min(end, lo + kWave);
        long best = std::numeric_limits<long>::max();
#if defined(DUBINS_INTERCEPT_HAVE_OPENMP)
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
        for (long k = lo; k < hi; ++k) {
            if (k < best && cell_hit(m, rho, h, k, 0)) {
                best = std::min(best, k);
            }
        }
        if (best != std::numeric_limits<long>::max()) {
            return cell_hit(m, rho, h, best, iters);
        }
    }
    return std::nullopt;
}

template <class Scan>
double scan_oracle(const TargetMotion& m, double rho, const OracleConfig& cfg, Scan scan) {
    check_config(cfg);
    long begin = 1;
    double horizon = cfg.t_max;
    for (int doubling = 0; doubling <= kMaxDoublings; ++doubling) {
        const long end = static_cast<long>(std::ceil(horizon / cfg.grid_step)) + 1;
        if (auto t = scan(m, rho, cfg.grid_step, begin, end, cfg.refine_iters)) {
            return *t;
        }
        begin = end;
        horizon *= 2.0;
    }
    throw std::runtime_error("mtip_oracle: horizon exhausted without a feasible time");
}

// Pose after a turn of `phi` radians on the initial circle of the given kind.
Configuration after_turn(SegmentKind turn, double phi, double rho) {
    return advance(Configuration::origin(), Segment(turn, phi), rho);
}

Point heading_of(const Configuration& c) { return {std::cos(c.theta()), std::sin(c.theta())}; }

Point turn_center(const Configuration& c, SegmentKind turn, double rho) {
    const Point h = heading_of(c);
    const Point left_normal{-h.y, h.x};
    return c.position() + (turn == SegmentKind::LeftArc ? rho : -rho) * left_normal;
}

double line_residual(Point p, SegmentKind turn, double phi, double rho) {
    const Configuration c = after_turn(turn, phi, rho);
    return cross(heading_of(c), p - c.position());
}

double arc_residual(Point p, SegmentKind turn, double phi, double rho) {
    const Configuration c = after_turn(turn, phi, rho);
    return distance(p, turn_center(c, mirror(turn), rho)) - rho;
}

double bisect_residual(double (*res)(Point, SegmentKind, double, double), Point p, SegmentKind turn, double rho,
                       double lo, double hi) {
    double flo = res(p, turn, lo, rho);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = res(p, turn, mid, rho);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double line_length(Point p, SegmentKind turn, double phi, double rho) {
    const Configuration c = after_turn(turn, phi, rho);
    const Point d = p - c.position();
    if (dot(d, heading_of(c)) < -1e-9 * rho) {
        return std::numeric_limits<double>::infinity();
    }
    return rho * phi + norm(d);
}

double arc_length(Point p, SegmentKind turn, double phi, double rho) {
    const Configuration c = after_turn(turn, phi, rho);
    const SegmentKind second = mirror(turn);
    const Point center = turn_center(c, second, rho);
    const double a0 = std::atan2(c.y() - center.y, c.x() - center.x);
    const double a1 = std::atan2(p.y - center.y, p.x - center.x);
    const double sweep = second == SegmentKind::LeftArc ? normalize_angle(a1 - a0) : normalize_angle(a0 - a1);
    return rho * (phi + sweep);
}

} // namespace

OracleConfig default_oracle_config(const TargetMotion& m, double rho) {
    OracleConfig cfg;
    cfg.t_max = 4.0 * (norm(m.initial_position()) / (1.0 - m.speed()) + kTwoPi * rho);
    return cfg;
}

double rdp_oracle(Point p, double rho, int grid) {
    if (!(rho > 0.0)) {
        throw std::invalid_argument("rdp_oracle: rho must be positive");
    }
    if (norm(p) <= 1e-12 * rho) {
        return 0.0;
    }
    grid = std::max(grid, 16);
    double best = std::numeric_limits<double>::infinity();
    const double h = kTwoPi / grid;
    const double tiny = 1e-10 * std::max(rho, norm(p));
    for (const SegmentKind turn : {SegmentKind::LeftArc, SegmentKind::RightArc}) {
        double prev_line = line_residual(p, turn, 0.0, rho);
        double prev_arc = arc_residual(p, turn, 0.0, rho);
        for (int i = 0; i <= grid; ++i) {
            const double phi = i * h;
            const double line = i == 0 ? prev_line : line_residual(p, turn, phi, rho);
            const double arc = i == 0 ? prev_arc : arc_residual(p, turn, phi, rho);
            if (std::abs(line) <= tiny) {
                best = std::min(best, line_length(p, turn, phi, rho));
            } else if (i > 0 && (line < 0.0) != (prev_line < 0.0) && std::abs(prev_line) > tiny) {
                const double r = bisect_residual(line_residual, p, turn, rho, phi - h, phi);
                best = std::min(best, line_length(p, turn, r, rho));
            }
            if (std::abs(arc) <= tiny) {
                best = std::min(best, arc_length(p, turn, phi, rho));
            } else if (i > 0 && (arc < 0.0) != (prev_arc < 0.0) && std::abs(prev_arc) > tiny) {
                const double r = bisect_residual(arc_residual, p, turn, rho, phi - h, phi);
                best = std::min(best, arc_length(p, turn, r, rho));
            }
            prev_line = line;
            prev_arc = arc;
        }
    }
    return best;
}

double mtip_oracle(const TargetMotion& m, double rho, const OracleConfig& cfg) {
    return scan_oracle(m, rho, cfg, first_hit);
}

double mtip_oracle(const TargetMotion& m, double rho) { return mtip_oracle(m, rho, default_oracle_config(m, rho)); }

double mtip_oracle_parallel(const TargetMotion& m, double rho, const OracleConfig& cfg) {
    return scan_oracle(m, rho, cfg, first_hit_parallel);
}

std::vector<double> dense_zero_scan(const roots::SmoothFn& f, int n) {
    if (n < 1000) {
        throw std::invalid_argument("dense_zero_scan: need at least 1000 samples");
    }
    const double a = f.domain.lo;
    const double b = f.domain.hi;
    const double h = (b - a) / n;
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    std::vector<double> v(t.size());
    double scale = 1.0;
    for (int i = 0; i <= n; ++i) {
        t[static_cast<std::size_t>(i)] = i == n ? b : a + i * h;
        v[static_cast<std::size_t>(i)] = f(t[static_cast<std::size_t>(i)]);
        scale = std::max(scale, std::abs(v[static_cast<std::size_t>(i)]));
    }
    const double tiny = 1e-13 * scale;
    auto strict = [&](std::size_t j) { return std::abs(v[j]) > tiny; };
    auto flips = [&](std::size_t i, std::size_t j) { return (v[i] < 0.0 && v[j] > 0.0) || (v[i] > 0.0 && v[j] < 0.0); };
    std::vector<double> zeros;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!strict(i)) {
            const bool left = i > 0 && strict(i - 1) && flips(i - 1, i);
            const bool right = i + 1 < t.size() && strict(i + 1) && flips(i, i + 1);
            if (!left && !right) {
                zeros.push_back(t[i]);
            }
        }
        if (i + 1 < t.size() && flips(i, i + 1) && (strict(i) || strict(i + 1))) {
            zeros.push_back(roots::bisect(f, t[i], t[i + 1]));
        }
    }
    return roots::merge_close(std::move(zeros), 1e-12 * std::max(1.0, b - a));
}

} // namespace dubins
