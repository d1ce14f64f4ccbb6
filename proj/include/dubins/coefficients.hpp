#pragma once
// Fixed-point equations for intercepts along CS and CC paths.
//
// R_a S_d reaching E(t) at t = rho a + d reduces to
//   G_cs(a) = A1 sin a + A2 cos a + a (A3 cos a + A4 sin a) + A5 = 0,  a in [0, 2pi].
// L_u R_w reaching E(t) at t = rho (u + w) = rho eta reduces to
//   G_cc(eta) = B1 eta^4 + ... + B5 + B6 cos eta + B7 sin eta + eta (B8 cos eta + B9 sin eta) = 0.

#include <array>
#include <optional>
#include <vector>

#include "dubins/cs_form.hpp"
#include "dubins/geometry.hpp"
#include "dubins/roots.hpp"

namespace dubins {

struct CsCoefficients {
    double A1{0.0};
    double A2{0.0};
    double A3{0.0};
    double A4{0.0};
    double A5{0.0};
    double a1{0.0};
    /// Present only when |v_x| is large enough to divide by.
    std::optional<double> a2;
    std::optional<double> a3;

    [[nodiscard]] CsForm form() const noexcept { return {A1, A2, A3, A4, A5}; }
};

/// Throws std::invalid_argument for rho <= 0.
[[nodiscard]] CsCoefficients cs_coefficients(const TargetMotion& m, double rho);

[[nodiscard]] double gcs_value(const CsCoefficients& c, double alpha) noexcept;

struct CcCoefficients {
    std::array<double, 9> B{};
    double Ca{0.0};
    double Cb{0.0};
    double Cc{0.0};

    [[nodiscard]] double b(int i) const { return B.at(static_cast<std::size_t>(i - 1)); }
};

/// Throws std::invalid_argument for rho <= 0 and for a (numerically) stationary
/// target, where the intercept problem is the plain shortest-path problem.
[[nodiscard]] CcCoefficients cc_coefficients(const TargetMotion& m, double rho);

inline constexpr double kEtaMax = 4.0 * kPi;

/// n-th derivative of G_cc, 0 <= n <= 4.
[[nodiscard]] double gcc_derivative(const CcCoefficients& c, int order, double eta);

/// G_cc^(4) written in the G_cs form.
[[nodiscard]] CsForm gcc_fourth_derivative_form(const CcCoefficients& c) noexcept;

/// [G_cc, G_cc', G_cc'', G_cc''', G_cc^(4)] on [0, eta_max].
[[nodiscard]] std::vector<roots::SmoothFn> gcc_chain(const CcCoefficients& c, double eta_max = kEtaMax);

/// All zeros of G_cc on [0, eta_max]: the G_cs procedure for G^(4), then
/// Algorithm 1 down the chain to G_cc.
[[nodiscard]] roots::ZeroSet gcc_zeros(const CcCoefficients& c, double eta_max = kEtaMax);

} // namespace dubins
