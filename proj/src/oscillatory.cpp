#include "valleysplit/oscillatory.hpp"

#include <cmath>

namespace valleysplit {

std::array<std::complex<double>, 4> exp_moments(double omega, double h) {
    std::array<std::complex<double>, 4> m{};
    const std::complex<double> u(0.0, -omega);
    const std::complex<double> x = u * h;

    if (std::abs(omega * h) < 2.0) {
        double hp = h;
        for (int k = 0; k < 4; ++k, hp *= h) {
            std::complex<double> term = 1.0;
            std::complex<double> sum = 1.0 / static_cast<double>(k + 1);
            for (int j = 1; j < 60; ++j) {
                term *= x / static_cast<double>(j);
                const std::complex<double> add = term / static_cast<double>(k + j + 1);
                sum += add;
                if (std::abs(add) < 1e-18 * std::abs(sum))
                    break;
            }
            m[k] = hp * sum;
        }
        return m;
    }

    const std::complex<double> e = std::exp(x);
    m[0] = (e - 1.0) / u;
    double hk = 1.0;
    for (int k = 1; k < 4; ++k) {
        hk *= h;
        m[k] = (hk * e - static_cast<double>(k) * m[k - 1]) / u;
    }
    return m;
}

std::complex<double> exp_cubic_integral(double omega, double a, double h, const std::array<double, 4>& poly) {
    const auto m = exp_moments(omega, h);
    std::complex<double> s = 0.0;
    for (int k = 0; k < 4; ++k)
        s += poly[k] * m[k];
    return std::polar(1.0, -omega * a) * s;
}

} // namespace valleysplit
