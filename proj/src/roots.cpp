#include "dubins/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dubins::roots {
namespace {

constexpr int kMaxBisections = 400;

bool opposite_signs(double a, double b) noexcept { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double bisect_bracket(const SmoothFn& f, double lo, double hi, double flo, double tol_t) {
    for (int it = 0; it < kMaxBisections && hi - lo > tol_t; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if (opposite_signs(fm, flo)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return lo + 0.5 * (hi - lo);
}

} // namespace

std::vector<double> merge_close(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    out.reserve(values.size());
    for (const double v : values) {
        if (out.empty() || v - out.back() > tol) {
            out.push_back(v);
        }
    }
    return out;
}

double bisect(const SmoothFn& f, double lo, double hi) {
    if (lo > hi) {
        std::swap(lo, hi);
    }
    const double flo = f(lo);
    const double fhi = f(hi);
    if (!opposite_signs(flo, fhi)) {
        throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
    }
    const double tol_t = kBisectTol * std::max(f.domain.width(), hi - lo);
    return bisect_bracket(f, lo, hi, flo, tol_t);
}

ZeroSet all_zeros(const SmoothFn& f, std::span<const double> critical_points, const ZeroOptions& options) {
    const double a = f.domain.lo;
    const double b = f.domain.hi;
    if (!(a <= b)) {
        throw std::invalid_argument("all_zeros: empty domain");
    }
    ZeroSet out;
    std::vector<double>& t = out.critical_points;
    t.reserve(critical_points.size() + 2);
    t.push_back(a);
    for (const double c : critical_points) {
        if (c > a && c < b) {
            t.push_back(c);
        }
    }
    t.push_back(b);
    std::sort(t.begin() + 1, t.end() - 1);
    t.erase(std::unique(t.begin(), t.end()), t.end());

    std::vector<double> g(t.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        g[i] = f(t[i]);
        if (std::isfinite(g[i])) {
            scale = std::max(scale, std::abs(g[i]));
        }
    }
    if (options.value_scale) {
        scale = std::max(*options.value_scale, 0.0);
    }
    const double tol_val = kValueTol * scale;
    const double tol_t = kBisectTol * (b - a);

    auto strict = [&](std::size_t j) { return std::abs(g[j]) > tol_val; };
    auto flips = [&](std::size_t a, std::size_t b) { return opposite_signs(g[a], g[b]); };
    std::vector<double> zeros;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!strict(i)) {
            // A near-zero critical value is a touching zero unless the sign really
            // flips against a neighbour; then the crossings are bisected instead,
            // which keeps two close simple zeros apart.
            const bool left = i > 0 && strict(i - 1) && flips(i - 1, i);
            const bool right = i + 1 < t.size() && strict(i + 1) && flips(i, i + 1);
            if (!left && !right) {
                zeros.push_back(t[i]);
            }
        }
        if (i + 1 < t.size() && flips(i, i + 1) && (strict(i) || strict(i + 1))) {
            zeros.push_back(bisect_bracket(f, t[i], t[i + 1], g[i], tol_t));
        }
    }
    out.zeros = merge_close(std::move(zeros), kMergeTol * (b - a));
    return out;
}

ZeroSet derivative_chain_zeros(std::span<const SmoothFn> chain, std::span<const double> base_critical_points) {
    if (chain.empty()) {
        throw std::invalid_argument("derivative_chain_zeros: empty chain");
    }
    std::vector<double> critical(base_critical_points.begin(), base_critical_points.end());
    ZeroSet level;
    for (std::size_t k = chain.size(); k-- > 0;) {
        level = all_zeros(chain[k], critical);
        critical = level.zeros;
    }
    return level;
}

} // namespace dubins::roots
