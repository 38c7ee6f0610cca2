#pragma once

#include <array>
#include <complex>

namespace valleysplit {

/// m_k = integral_0^h t^k exp(-i omega t) dt for k = 0..3.
///
/// Power series for |omega h| < 2, upward recurrence (integration by parts) otherwise;
/// both are accurate to a few ulps in their range, including omega = 0.
std::array<std::complex<double>, 4> exp_moments(double omega, double h);

/// integral_a^{a+h} exp(-i omega z) p(z - a) dz for the cubic p(t) = sum_k poly[k] t^k.
std::complex<double> exp_cubic_integral(double omega, double a, double h, const std::array<double, 4>& poly);

} // namespace valleysplit
