#pragma once
// Closed-form real roots of low-degree polynomials, Newton-polished.
// Returned roots are sorted with repeated roots collapsed.

#include <vector>

namespace dubins::roots {

/// c2 x^2 + c1 x + c0. Falls back to the linear case when c2 == 0.
/// Throws std::invalid_argument when every coefficient is zero.
[[nodiscard]] std::vector<double> quadratic_real_roots(double c2, double c1, double c0);

/// c3 x^3 + ... + c0, degrading to the quadratic when c3 is negligible.
[[nodiscard]] std::vector<double> cubic_real_roots(double c3, double c2, double c1, double c0);

/// c4 x^4 + ... + c0 via Ferrari's resolvent cubic, degrading to lower degree
/// when c4 is negligible relative to the largest coefficient.
[[nodiscard]] std::vector<double> quartic_real_roots(double c4, double c3, double c2, double c1, double c0);

/// Horner evaluation, coefficients from highest degree down.
[[nodiscard]] double polyval(const std::vector<double>& coeffs, double x) noexcept;

} // namespace dubins::roots
