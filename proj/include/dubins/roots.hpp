#pragma once
/**
 * @file   roots.hpp
 * @brief  All zeros of a smooth function on an interval from its critical points.
 *
 * Between two consecutive zeros of f' the function is monotone, so it has a
 * zero there iff the endpoint values differ in sign (or one of them vanishes).
 * Given every critical point, one bisection per sign-changing pair therefore
 * recovers the complete zero set.
 */

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace dubins::roots {

/// |f(t)| at or below kValueTol * scale(f) counts as a zero.
inline constexpr double kValueTol = 1e-10;
/// Bisection stops once the bracket is below kBisectTol * (b - a).
inline constexpr double kBisectTol = 1e-12;
/// Zeros closer than kMergeTol * (b - a) collapse into one.
inline constexpr double kMergeTol = 1e-10;

struct Interval {
    double lo{0.0};
    double hi{0.0};

    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] bool contains(double t) const noexcept { return t >= lo && t <= hi; }
};

/// A side-effect-free real function with a finite number of zeros on `domain`.
struct SmoothFn {
    std::function<double(double)> eval;
    Interval domain;

    double operator()(double t) const { return eval(t); }
};

struct ZeroSet {
    /// Strictly increasing.
    std::vector<double> zeros;
    /// Scaffold actually used: domain endpoints plus interior critical points.
    std::vector<double> critical_points;
};

struct ZeroOptions {
    /// Overrides scale(f) = max(1, max |f| over the scaffold) in the zero test.
    std::optional<double> value_scale;
};

/// Zero of f inside [lo, hi]. Throws std::invalid_argument unless f(lo) f(hi) < 0.
[[nodiscard]] double bisect(const SmoothFn& f, double lo, double hi);

/// Zeros of f on its domain given every zero of f' (unsorted input is fine;
/// points outside the open domain are ignored).
[[nodiscard]] ZeroSet all_zeros(const SmoothFn& f, std::span<const double> critical_points,
                                const ZeroOptions& options = {});

/// chain[k+1] must be the derivative of chain[k], all on the same domain, and
/// `base_critical_points` every zero of the derivative of chain.back().
/// Zeros of each element seed the scaffold of the one before it.
[[nodiscard]] ZeroSet derivative_chain_zeros(std::span<const SmoothFn> chain,
                                             std::span<const double> base_critical_points);

/// Sorts and collapses values closer than `tol`.
[[nodiscard]] std::vector<double> merge_close(std::vector<double> values, double tol);

} // namespace dubins::roots
