#include "dubins/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dubins::roots {
namespace {

constexpr double kLeadingTol = 1e-13;
constexpr double kDiscTol = 1e-10;
constexpr double kResidualTol = 1e-9;
constexpr double kDuplicateTol = 1e-9;

double deriv_val(const std::vector<double>& c, double x) noexcept {
    const std::size_t n = c.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = acc * x + c[i] * static_cast<double>(n - i);
    }
    return acc;
}

double magnitude_sum(const std::vector<double>& c, double x) noexcept {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (const double ci : c) {
        acc = acc * ax + std::abs(ci);
    }
    return acc;
}

double polish(const std::vector<double>& c, double x) noexcept {
    for (int it = 0; it < 8; ++it) {
        const double f = polyval(c, x);
        const double df = deriv_val(c, x);
        if (f == 0.0 || df == 0.0 || !std::isfinite(df)) {
            break;
        }
        const double next = x - f / df;
        if (!std::isfinite(next)) {
            break;
        }
        // Keep the step only if it does not make the residual worse.
        if (std::abs(polyval(c, next)) > std::abs(f)) {
            break;
        }
        x = next;
    }
    return x;
}

std::vector<double> finish(const std::vector<double>& c, std::vector<double> xs) {
    std::vector<double> out;
    for (double x : xs) {
        if (!std::isfinite(x)) {
            continue;
        }
        x = polish(c, x);
        if (std::abs(polyval(c, x)) <= kResidualTol * std::max(magnitude_sum(c, x), 1e-300)) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    std::vector<double> merged;
    for (const double x : out) {
        if (merged.empty() || x - merged.back() > kDuplicateTol * std::max(1.0, std::abs(x))) {
            merged.push_back(x);
        }
    }
    return merged;
}

double max_abs(std::initializer_list<double> v) {
    double m = 0.0;
    for (const double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

// Monic x^2 + b x + c, with a small negative discriminant clamped to a double root.
std::vector<double> monic_quadratic(double b, double c) {
    double disc = b * b - 4.0 * c;
    const double scale = std::max({b * b, std::abs(4.0 * c), 1e-300});
    if (disc < 0.0) {
        if (disc < -kDiscTol * scale) {
            return {};
        }
        disc = 0.0;
    }
    const double sq = std::sqrt(disc);
    if (sq == 0.0) {
        return {-0.5 * b};
    }
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q == 0.0) {
        return {0.0};
    }
    return {q, c / q};
}

// Largest real root of the monic cubic x^3 + a x^2 + b x + c.
std::vector<double> monic_cubic(double a, double b, double c) {
    const double a3 = a / 3.0;
    const double p = b - a * a3;
    const double q = 2.0 * a3 * a3 * a3 - a3 * b + c;
    std::vector<double> ys;
    if (std::abs(p) < 1e-300) {
        ys.push_back(std::cbrt(-q));
    } else {
        const double disc = q * q / 4.0 + p * p * p / 27.0;
        if (disc > 0.0) {
            const double sq = std::sqrt(disc);
            ys.push_back(std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq));
        } else {
            const double r = std::sqrt(-p / 3.0);
            const double arg = std::clamp(-q / (2.0 * r * r * r), -1.0, 1.0);
            const double phi = std::acos(arg) / 3.0;
            for (int k = 0; k < 3; ++k) {
                ys.push_back(2.0 * r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
            }
        }
    }
    for (double& y : ys) {
        y -= a3;
    }
    return ys;
}

} // namespace

double polyval(const std::vector<double>& coeffs, double x) noexcept {
    double acc = 0.0;
    for (const double c : coeffs) {
        acc = acc * x + c;
    }
    return acc;
}

std::vector<double> quadratic_real_roots(double c2, double c1, double c0) {
    const double m = max_abs({c2, c1, c0});
    if (m == 0.0) {
        throw std::invalid_argument("quadratic_real_roots: zero polynomial");
    }
    if (std::abs(c2) <= kLeadingTol * m) {
        if (std::abs(c1) <= kLeadingTol * m) {
            return {};
        }
        return {-c0 / c1};
    }
    return finish({c2, c1, c0}, monic_quadratic(c1 / c2, c0 / c2));
}

std::vector<double> cubic_real_roots(double c3, double c2, double c1, double c0) {
    const double m = max_abs({c3, c2, c1, c0});
    if (m == 0.0) {
        throw std::invalid_argument("cubic_real_roots: zero polynomial");
    }
    if (std::abs(c3) <= kLeadingTol * m) {
        return quadratic_real_roots(c2, c1, c0);
    }
    return finish({c3, c2, c1, c0}, monic_cubic(c2 / c3, c1 / c3, c0 / c3));
}

std::vector<double> quartic_real_roots(double c4, double c3, double c2, double c1, double c0) {
    const double m = max_abs({c4, c3, c2, c1, c0});
    if (m == 0.0) {
        throw std::invalid_argument("quartic_real_roots: zero polynomial");
    }
    if (std::abs(c4) <= kLeadingTol * m) {
        return cubic_real_roots(c3, c2, c1, c0);
    }
    const double a = c3 / c4;
    const double b = c2 / c4;
    const double c = c1 / c4;
    const double d = c0 / c4;
    const double a2 = a * a;
    const double p = b - 3.0 * a2 / 8.0;
    const double q = c - a * b / 2.0 + a2 * a / 8.0;
    const double r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    std::vector<double> ys;
    const double qscale = std::max({std::abs(p) * std::sqrt(std::abs(r)), std::pow(std::abs(p), 1.5), 1e-300});
    if (std::abs(q) <= 1e-14 * std::max(qscale, 1.0)) {
        // Biquadratic in y^2.
        for (const double z : monic_quadratic(p, r)) {
            if (z > 0.0) {
                ys.push_back(std::sqrt(z));
                ys.push_back(-std::sqrt(z));
            } else if (z >= -kDiscTol * std::max(1.0, std::abs(p))) {
                ys.push_back(0.0);
            }
        }
    } else {
        const std::vector<double> res = monic_cubic(p, p * p / 4.0 - r, -q * q / 8.0);
        double mr = *std::max_element(res.begin(), res.end());
        if (mr <= 0.0) {
            mr = std::max(mr, 0.0);
        }
        const double s = std::sqrt(2.0 * mr);
        if (s > 0.0) {
            const double t = q / (2.0 * s);
            for (const double y : monic_quadratic(-s, p / 2.0 + mr + t)) {
                ys.push_back(y);
            }
            for (const double y : monic_quadratic(s, p / 2.0 + mr - t)) {
                ys.push_back(y);
            }
        }
    }
    std::vector<double> xs;
    xs.reserve(ys.size());
    for (const double y : ys) {
        xs.push_back(y - a / 4.0);
    }
    return finish({c4, c3, c2, c1, c0}, std::move(xs));
}

} // namespace dubins::roots
