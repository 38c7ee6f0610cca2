#include "doctest.h"

#include <cmath>
#include <complex>

#include "valleysplit/oscillatory.hpp"

using namespace valleysplit;

namespace {

// composite Simpson on a fine grid
std::complex<double> simpson_moment(double omega, double h, int k, int panels = 4000) {
    const double dt = h / panels;
    std::complex<double> s = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double t = i * dt;
        const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += w * std::pow(t, k) * std::polar(1.0, -omega * t);
    }
    return s * dt / 3.0;
}

} // namespace

TEST_CASE("moments against numerical integration") {
    for (double omega : {0.3, 19.667, 60.0})
        for (double h : {0.01, 0.05, 0.2, 1.5}) {
            const auto m = exp_moments(omega, h);
            for (int k = 0; k < 4; ++k) {
                const auto ref = simpson_moment(omega, h, k);
                const double scale = std::pow(h, k + 1);
                CHECK(std::abs(m[static_cast<std::size_t>(k)] - ref) < 1e-10 * scale);
            }
        }
}

TEST_CASE("zero frequency reduces to polynomial moments") {
    const double h = 0.37;
    const auto m = exp_moments(0.0, h);
    for (int k = 0; k < 4; ++k) {
        CHECK(m[static_cast<std::size_t>(k)].real() == doctest::Approx(std::pow(h, k + 1) / (k + 1)).epsilon(1e-15));
        CHECK(m[static_cast<std::size_t>(k)].imag() == 0.0);
    }
}

TEST_CASE("series and recurrence agree at the switch") {
    const double omega = 19.667;
    const double h_switch = 2.0 / omega;
    const auto below = exp_moments(omega, h_switch * (1.0 - 1e-9));
    const auto above = exp_moments(omega, h_switch * (1.0 + 1e-9));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::abs(below[k] - above[k]) < 1e-8 * std::abs(above[k]));
}

TEST_CASE("cubic integral carries the phase of the element start") {
    const double omega = 19.667, h = 0.05;
    const std::array<double, 4> poly{1.0, -2.0, 0.5, 3.0};
    const auto at0 = exp_cubic_integral(omega, 0.0, h, poly);
    const double a = 1.234;
    const auto at_a = exp_cubic_integral(omega, a, h, poly);
    CHECK(std::abs(at_a - at0 * std::polar(1.0, -omega * a)) < 1e-14);

    const auto m = exp_moments(omega, h);
    std::complex<double> direct = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        direct += poly[k] * m[k];
    CHECK(std::abs(at0 - direct) < 1e-15);
}
