#include "valleysplit/valley_coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "valleysplit/error.hpp"
#include "valleysplit/oscillatory.hpp"

namespace valleysplit {

namespace {

/// Sum over elements of the oscillatory integral of |psi_n|^2 (g0 + g1 z), where (g0, g1)
/// may change per element.
template <class Weight>
std::complex<double> element_sum(const EigenSolution& solution, std::size_t n, double k0, std::optional<Window> window,
                                 Weight&& weight) {
    if (!(k0 > 0.0))
        throw InvalidArgument("K0 must be positive");
    const auto& z = solution.nodes();
    const auto& c = solution.coefficients(n);
    const double omega = 2.0 * k0;

    std::complex<double> total = 0.0;
    for (std::size_t e = 0; e + 1 < z.size(); ++e) {
        const double a = z[e];
        const double h = z[e + 1] - a;
        const double mid = a + 0.5 * h;
        if (window && (mid < window->lo_nm || mid > window->hi_nm))
            continue;
        const auto [g0, g1] = weight(mid);
        // move g to the local coordinate t = z - a
        const double w0 = g0 + g1 * a;
        const double w1 = g1;
        const double pa = c[e];
        const double d = (c[e + 1] - pa) / h;
        const double q0 = pa * pa;
        const double q1 = 2.0 * pa * d;
        const double q2 = d * d;
        const std::array<double, 4> poly{q0 * w0, q1 * w0 + q0 * w1, q2 * w0 + q1 * w1, q2 * w1};
        total += exp_cubic_integral(omega, a, h, poly);
    }
    return total;
}

struct LinearWeight {
    double g0;
    double g1;
};

std::complex<double> confinement_part(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                      const ValleyPairConstants& constants, std::optional<Window> window) {
    return element_sum(solution, n, constants.k0_inv_nm, window, [&](double mid) {
        return LinearWeight{constants.p_V * profile.segment_values()[profile.segment_at(mid)], 0.0};
    });
}

std::complex<double> field_part(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                const ValleyPairConstants& constants, std::optional<Window> window) {
    const double s = profile.slope();
    return element_sum(solution, n, constants.k0_inv_nm, window, [&](double) {
        return LinearWeight{constants.p_D_nm * s, constants.p_V * s};
    });
}

} // namespace

std::complex<double> oscillatory_overlap(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                         const ValleyPairConstants& constants, std::optional<Window> window) {
    const double s = profile.slope();
    return element_sum(solution, n, constants.k0_inv_nm, window, [&](double mid) {
        const double v_seg = profile.segment_values()[profile.segment_at(mid)];
        return LinearWeight{constants.p_V * v_seg + constants.p_D_nm * s, constants.p_V * s};
    });
}

std::complex<double> interface_term(const EigenSolution& solution, std::size_t n, std::span<const PotentialJump> jumps,
                                    double p_D_nm, double k0_inv_nm) {
    if (!(k0_inv_nm > 0.0))
        throw InvalidArgument("K0 must be positive");
    const auto& z = solution.nodes();
    const auto& c = solution.coefficients(n);
    const double tol = 1e-12 * std::max({1.0, std::abs(z.front()), std::abs(z.back())});

    std::complex<double> total = 0.0;
    for (const auto& jump : jumps) {
        const auto it = std::lower_bound(z.begin(), z.end(), jump.z_nm - tol);
        if (it == z.end() || std::abs(*it - jump.z_nm) > tol)
            throw InvalidArgument("interface at z = " + std::to_string(jump.z_nm) +
                                  " nm is not a mesh node; the mesh must place nodes on interfaces");
        const double psi = c[static_cast<std::size_t>(std::distance(z.begin(), it))];
        total += p_D_nm * jump.dV_eV * psi * psi * std::polar(1.0, -2.0 * k0_inv_nm * jump.z_nm);
    }
    return total;
}

SplittingResult valley_splitting(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                 const ValleyPairConstants& constants, std::optional<Window> window) {
    SplittingResult r;
    r.n = n;
    r.constants = constants;
    r.confinement = confinement_part(solution, n, profile, constants, window);
    r.field = field_part(solution, n, profile, constants, window);
    r.interface = interface_term(solution, n, profile.jumps(), constants.p_D_nm, constants.k0_inv_nm);
    r.delta_eV = 2.0 * std::abs(r.total());
    return r;
}

CoupledLevels coupled_levels(double E_n_eV, const SplittingResult& result, bool coupling_enabled) {
    if (!(result.delta_eV >= 0.0))
        throw InvalidArgument("splitting must be nonnegative");
    const double half = coupling_enabled ? 0.5 * result.delta_eV : 0.0;
    return {result.n, E_n_eV - half, E_n_eV + half};
}

double bulk_splitting_from_density_meV(double n_s_1e12_per_cm2) {
    if (!(n_s_1e12_per_cm2 >= 0.0))
        throw InvalidArgument("surface density must be nonnegative");
    return 1.14 * n_s_1e12_per_cm2;
}

double bulk_splitting_from_field_meV(double field_1e7_V_per_m) {
    if (!(field_1e7_V_per_m >= 0.0))
        throw InvalidArgument("field must be nonnegative");
    return 0.718 * field_1e7_V_per_m;
}

} // namespace valleysplit
