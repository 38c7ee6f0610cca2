#pragma once

#include <array>
#include <string>
#include <string_view>

namespace valleysplit {

/// Well/barrier pair with the band parameters that enter the valley coupling.
///
/// Masses are in units of m0, energies in eV, lengths in nm. T and eps_G are
/// held in rydberg atomic units (Ry*bohr and Ry).
struct MaterialSystem {
    std::string name = "sio2_si";
    double m_z_well = 0.916;
    double m_z_barrier = 0.916;
    double delta_Ec_eV = 3.1;
    double lattice_nm = 0.5431;
    double k0_fraction = 0.85;
    double T_ry_bohr = 1.08;
    double eps_G_ry = 0.268;
    // Coefficients of D = alpha e_l.e_l' + beta; stored, not used numerically.
    double alpha = 0.6086;
    double beta = 0.3915;

    /// Valley minimum K0 = k0_fraction * 2 pi / a, in 1/nm.
    [[nodiscard]] double k0_inv_nm() const;
    /// K0 in 1/bohr.
    [[nodiscard]] double k0_au() const;

    /// Throws InvalidArgument unless masses, offset and lattice constant are positive.
    void validate() const;
};

/// SiO2/Si/SiO2 defaults.
MaterialSystem sio2_si();
/// Si0.7Ge0.3/Si/Si0.7Ge0.3 defaults.
MaterialSystem sige30_si();
/// Lookup by preset name ("sio2_si" | "sige30_si").
MaterialSystem material_preset(std::string_view name);

enum class ConstantsMode { paper_canonical, analytic };

std::string_view to_string(ConstantsMode mode);
ConstantsMode parse_constants_mode(std::string_view text);

/// Coupling constants for the z-valley pair (valleys 5 and 6).
struct ValleyPairConstants {
    ConstantsMode mode = ConstantsMode::paper_canonical;
    double I56 = -0.217;
    double c_J = 0.414;     ///< J56 = c_J / K0
    double p_V = 1.045;     ///< prefactor of V in the splitting integral
    double p_D_nm = 0.0;    ///< prefactor of dV/dz, c_J / K0
    double k0_inv_nm = 0.0;

    // Both routes, reported side by side regardless of mode.
    double canonical_I56 = -0.217;
    double canonical_c_J = 0.414;
    double canonical_p_V = 1.045;
    double analytic_I56 = 0.0;
    double analytic_c_J = 0.0;
    double analytic_p_V = 0.0;

    /// Same pair with every prefactor zeroed: the uncoupled comparison.
    [[nodiscard]] ValleyPairConstants zeroed() const;
};

/// lambda_K = atan(2 T K / eps_G) / 2 with K in 1/bohr.
double lambda_k(double k_au, const MaterialSystem& params);

using AxisVector = std::array<double, 3>;

/// I_ll' = (1 + e.e')/2 - (1 - e.e')/2 cos(2 lambda_K). Both vectors must be
/// +-x, +-y or +-z.
double coupling_I(const AxisVector& e_l, const AxisVector& e_lp, double k_au, const MaterialSystem& params);

ValleyPairConstants valley_pair_constants(const MaterialSystem& params,
                                          ConstantsMode mode = ConstantsMode::paper_canonical);

} // namespace valleysplit
