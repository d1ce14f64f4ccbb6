#include "dubins/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace dubins {
namespace {

constexpr double kStationaryTol = 1e-9;
constexpr double kDivisionTol = 1e-9;

void require_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw std::invalid_argument("turning radius must be positive and finite");
    }
}

// k-th derivative of cos and sin.
double dcos(int k, double e) noexcept {
    switch (k & 3) {
    case 0: return std::cos(e);
    case 1: return -std::sin(e);
    case 2: return -std::cos(e);
    default: return std::sin(e);
    }
}

double dsin(int k, double e) noexcept { return dcos(k + 3, e); }

} // namespace

CsCoefficients cs_coefficients(const TargetMotion& m, double rho) {
    require_rho(rho);
    const double x0 = m.initial_position().x;
    const double y0 = m.initial_position().y;
    const double vx = m.velocity().x;
    const double vy = m.velocity().y;
    CsCoefficients c;
    c.a1 = rho;
    if (std::abs(vx) > kDivisionTol) {
        c.a2 = -x0 / vx;
        c.a3 = -y0 + vy / vx * x0;
    }
    c.A1 = -y0 - rho * vx;
    c.A2 = x0 - rho - rho * vy;
    c.A3 = rho * vx;
    c.A4 = -rho * vy;
    c.A5 = rho + rho * vy - x0 * vy + y0 * vx;
    return c;
}

double gcs_value(const CsCoefficients& c, double alpha) noexcept { return c.form().value(alpha); }

CcCoefficients cc_coefficients(const TargetMotion& m, double rho) {
    require_rho(rho);
    if (m.speed() <= kStationaryTol) {
        throw std::invalid_argument("cc_coefficients: stationary target");
    }
    const double x0 = m.initial_position().x;
    const double y0 = m.initial_position().y;
    const double vx = m.velocity().x;
    const double vy = m.velocity().y;
    const double r2 = rho * rho;
    const double r3 = r2 * rho;
    CcCoefficients c;
    c.Ca = (vx * vx + vy * vy) * r2;
    c.Cb = 2.0 * (rho + x0) * vx * rho + 2.0 * y0 * vy * rho;
    c.Cc = (rho + x0) * (rho + x0) + y0 * y0;
    c.B[0] = c.Ca * c.Ca;
    c.B[1] = 2.0 * c.Ca * c.Cb;
    c.B[2] = c.Cb * c.Cb + 2.0 * c.Ca * c.Cc - 6.0 * r2 * c.Ca;
    c.B[3] = 2.0 * c.Cc * c.Cb - 6.0 * r2 * c.Cb;
    c.B[4] = c.Cc * c.Cc - 6.0 * r2 * c.Cc - 3.0 * r2 * r2;
    c.B[5] = 8.0 * r3 * (rho + x0);
    c.B[6] = 8.0 * r3 * y0;
    c.B[7] = 8.0 * r3 * rho * vx;
    c.B[8] = 8.0 * r3 * rho * vy;
    return c;
}

double gcc_derivative(const CcCoefficients& c, int order, double eta) {
    if (order < 0 || order > 4) {
        throw std::invalid_argument("gcc_derivative: order must be in [0, 4]");
    }
    const auto& B = c.B;
    // Polynomial part, coefficients B1..B5 on eta^4..eta^0.
    static constexpr std::array<std::array<double, 5>, 5> kFalling{{
        {1, 1, 1, 1, 1},
        {4, 3, 2, 1, 0},
        {12, 6, 2, 0, 0},
        {24, 6, 0, 0, 0},
        {24, 0, 0, 0, 0},
    }};
    double poly = 0.0;
    for (int i = 0; i < 5 - order; ++i) {
        const int power = 4 - i - order;
        poly += B[static_cast<std::size_t>(i)] * kFalling[static_cast<std::size_t>(order)][static_cast<std::size_t>(i)] *
                std::pow(eta, power);
    }
    // Trig part: B6 cos + B7 sin + eta g with g = B8 cos + B9 sin.
    auto g = [&](int k) { return B[7] * dcos(k, eta) + B[8] * dsin(k, eta); };
    double trig = B[5] * dcos(order, eta) + B[6] * dsin(order, eta) + eta * g(order);
    if (order > 0) {
        trig += order * g(order - 1);
    }
    return poly + trig;
}

CsForm gcc_fourth_derivative_form(const CcCoefficients& c) noexcept {
    const auto& B = c.B;
    return {B[6] + 4.0 * B[7], B[5] - 4.0 * B[8], B[7], B[8], 24.0 * B[0]};
}

std::vector<roots::SmoothFn> gcc_chain(const CcCoefficients& c, double eta_max) {
    if (!(eta_max > 0.0)) {
        throw std::invalid_argument("gcc_chain: eta_max must be positive");
    }
    std::vector<roots::SmoothFn> chain;
    chain.reserve(5);
    for (int k = 0; k <= 4; ++k) {
        chain.push_back({[c, k](double eta) { return gcc_derivative(c, k, eta); }, {0.0, eta_max}});
    }
    return chain;
}

roots::ZeroSet gcc_zeros(const CcCoefficients& c, double eta_max) {
    const std::vector<roots::SmoothFn> chain = gcc_chain(c, eta_max);
    const roots::ZeroSet fourth = cs_form_zeros(gcc_fourth_derivative_form(c), {0.0, eta_max});
    return roots::derivative_chain_zeros(std::span<const roots::SmoothFn>(chain.data(), 4), fourth.zeros);
}

} // namespace dubins
