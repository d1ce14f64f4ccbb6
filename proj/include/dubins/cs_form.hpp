#pragma once
// Functions of the form
//
//   G(a) = A1 sin a + A2 cos a + a (A3 cos a + A4 sin a) + A5
//
// and their zeros. Off the poles of D(a) = A3 cos a + A4 sin a, G = D * Gbar with
// Gbar(a) = a + (A1 sin a + A2 cos a + A5) / D(a). The critical points of Gbar
// are the real roots of a quartic in tan(a/2), which gives a complete scaffold
// for Algorithm 1 on every pole-free piece.

#include <vector>

#include "dubins/roots.hpp"

namespace dubins {

struct CsForm {
    double a1{0.0};
    double a2{0.0};
    double a3{0.0};
    double a4{0.0};
    double a5{0.0};

    [[nodiscard]] double value(double a) const noexcept;
    [[nodiscard]] double derivative(double a) const noexcept;
    [[nodiscard]] double denominator(double a) const noexcept;
    /// Gbar; infinite at poles.
    [[nodiscard]] double reduced(double a) const noexcept;
    [[nodiscard]] double reduced_derivative(double a) const noexcept;
    /// Coefficients (x^4 .. x^0) of the tan(a/2) quartic whose roots are the critical points of Gbar.
    [[nodiscard]] std::vector<double> critical_quartic() const;
};

/// Zeros of D inside [lo, hi]. Empty when A3 = A4 = 0.
[[nodiscard]] std::vector<double> cs_form_poles(const CsForm& f, roots::Interval domain);

/// Every critical point of Gbar inside [lo, hi] (or of G itself when A3 = A4 = 0),
/// plus the angles a = pi + 2k pi, where tan(a/2) is unbounded.
[[nodiscard]] std::vector<double> cs_form_critical_points(const CsForm& f, roots::Interval domain);

/// All zeros of G on the domain.
[[nodiscard]] roots::ZeroSet cs_form_zeros(const CsForm& f, roots::Interval domain);

} // namespace dubins
