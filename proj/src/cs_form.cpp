#include "dubins/cs_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dubins/geometry.hpp"
#include "dubins/polynomial.hpp"

namespace dubins {
namespace {

constexpr double kDegenerateTol = 1e-14;

bool pole_free(const CsForm& f) noexcept {
    const double s = std::max({std::abs(f.a1), std::abs(f.a2), std::abs(f.a5), 1.0});
    return std::abs(f.a3) <= kDegenerateTol * s && std::abs(f.a4) <= kDegenerateTol * s;
}

// Every angle base + k * period inside [lo, hi].
void push_periodic(std::vector<double>& out, double base, double period, roots::Interval d) {
    const double k0 = std::ceil((d.lo - base) / period - 1e-12);
    for (double k = k0;; k += 1.0) {
        const double a = base + k * period;
        if (a > d.hi + 1e-12 * std::max(1.0, std::abs(d.hi))) {
            break;
        }
        out.push_back(std::clamp(a, d.lo, d.hi));
    }
}

// h(a) = D^2 + (A1A3 - A2A4) - A4A5 cos a + A3A5 sin a vanishes at the critical points of Gbar.
double critical_residual(const CsForm& f, double a) noexcept {
    const double d = f.denominator(a);
    return d * d + (f.a1 * f.a3 - f.a2 * f.a4) - f.a4 * f.a5 * std::cos(a) + f.a3 * f.a5 * std::sin(a);
}

double critical_residual_slope(const CsForm& f, double a) noexcept {
    const double d = f.denominator(a);
    const double dd = -f.a3 * std::sin(a) + f.a4 * std::cos(a);
    return 2.0 * d * dd + f.a4 * f.a5 * std::sin(a) + f.a3 * f.a5 * std::cos(a);
}

double polish_critical(const CsForm& f, double a) noexcept {
    for (int it = 0; it < 4; ++it) {
        const double h = critical_residual(f, a);
        const double dh = critical_residual_slope(f, a);
        if (h == 0.0 || dh == 0.0) {
            break;
        }
        const double next = a - h / dh;
        if (!std::isfinite(next) || std::abs(next - a) > 1e-3 ||
            std::abs(critical_residual(f, next)) > std::abs(h)) {
            break;
        }
        a = next;
    }
    return a;
}

} // namespace

double CsForm::denominator(double a) const noexcept { return a3 * std::cos(a) + a4 * std::sin(a); }

double CsForm::value(double a) const noexcept {
    return a1 * std::sin(a) + a2 * std::cos(a) + a * denominator(a) + a5;
}

double CsForm::derivative(double a) const noexcept {
    const double s = std::sin(a);
    const double c = std::cos(a);
    return a1 * c - a2 * s + (a3 * c + a4 * s) + a * (-a3 * s + a4 * c);
}

double CsForm::reduced(double a) const noexcept {
    const double d = denominator(a);
    const double n = a1 * std::sin(a) + a2 * std::cos(a) + a5;
    if (d == 0.0) {
        return n == 0.0 ? a : std::copysign(std::numeric_limits<double>::infinity(), n);
    }
    return a + n / d;
}

double CsForm::reduced_derivative(double a) const noexcept {
    const double d = denominator(a);
    return critical_residual(*this, a) / (d * d);
}

std::vector<double> CsForm::critical_quartic() const {
    const double k = a1 * a3 - a2 * a4;
    return {
        a3 * a3 + k + a4 * a5,
        2.0 * a3 * a5 - 4.0 * a3 * a4,
        4.0 * a4 * a4 - 2.0 * a3 * a3 + 2.0 * k,
        2.0 * a3 * a5 + 4.0 * a3 * a4,
        a3 * a3 + k - a4 * a5,
    };
}

std::vector<double> cs_form_poles(const CsForm& f, roots::Interval domain) {
    std::vector<double> out;
    if (pole_free(f)) {
        return out;
    }
    push_periodic(out, std::atan2(f.a4, f.a3) + kHalfPi, kPi, domain);
    return out;
}

std::vector<double> cs_form_critical_points(const CsForm& f, roots::Interval domain) {
    std::vector<double> out;
    if (pole_free(f)) {
        if (f.a1 != 0.0 || f.a2 != 0.0) {
            push_periodic(out, std::atan2(f.a1, f.a2), kPi, domain);
        }
        return out;
    }
    const std::vector<double> q = f.critical_quartic();
    std::vector<double> xs;
    if (std::any_of(q.begin(), q.end(), [](double c) { return c != 0.0; })) {
        xs = roots::quartic_real_roots(q[0], q[1], q[2], q[3], q[4]);
    }
    for (const double x : xs) {
        push_periodic(out, polish_critical(f, 2.0 * std::atan(x)), kTwoPi, domain);
    }
    push_periodic(out, kPi, kTwoPi, domain);
    std::sort(out.begin(), out.end());
    return out;
}

roots::ZeroSet cs_form_zeros(const CsForm& f, roots::Interval domain) {
    if (!(domain.lo <= domain.hi)) {
        throw std::invalid_argument("cs_form_zeros: empty domain");
    }
    const std::vector<double> critical = cs_form_critical_points(f, domain);
    std::vector<double> cuts = cs_form_poles(f, domain);
    cuts.insert(cuts.begin(), domain.lo);
    cuts.push_back(domain.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // On each pole-free piece D keeps one sign, so G = D * Gbar changes sign
    // exactly where Gbar does; G stays finite at the poles, so it is the
    // function handed to Algorithm 1.
    double scale = 1.0;
    for (const double c : cuts) {
        scale = std::max(scale, std::abs(f.value(c)));
    }
    for (const double c : critical) {
        scale = std::max(scale, std::abs(f.value(c)));
    }
    roots::ZeroOptions options;
    options.value_scale = scale;

    roots::ZeroSet out;
    std::vector<double> zeros;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        roots::SmoothFn g{[&f](double a) { return f.value(a); }, {cuts[i], cuts[i + 1]}};
        std::vector<double> inner;
        for (const double c : critical) {
            if (c > cuts[i] && c < cuts[i + 1]) {
                inner.push_back(c);
            }
        }
        roots::ZeroSet piece = roots::all_zeros(g, inner, options);
        zeros.insert(zeros.end(), piece.zeros.begin(), piece.zeros.end());
        out.critical_points.insert(out.critical_points.end(), piece.critical_points.begin(),
                                   piece.critical_points.end());
    }
    const double merge = roots::kMergeTol * std::max(domain.width(), 1e-300);
    out.zeros = roots::merge_close(std::move(zeros), merge);
    out.critical_points = roots::merge_close(std::move(out.critical_points), 0.0);
    return out;
}

} // namespace dubins
