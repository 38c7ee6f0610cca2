#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>

#include "valleysplit/eigensolver.hpp"
#include "valleysplit/materials.hpp"
#include "valleysplit/potential.hpp"

namespace valleysplit {

/// Integration window [lo, hi] in nm; nullopt means the whole domain.
struct Window {
    double lo_nm;
    double hi_nm;
};

/// Splitting of subband n into its valley pair, all energies in eV.
struct SplittingResult {
    std::size_t n = 0;
    std::complex<double> confinement{};  ///< C_V: p_V * V_c
    std::complex<double> field{};        ///< C_F: p_V * eFz + p_D * eF
    std::complex<double> interface{};    ///< C_delta: p_D * sum of jumps
    double delta_eV = 0.0;               ///< 2 |C_V + C_F + C_delta|
    ValleyPairConstants constants;

    [[nodiscard]] std::complex<double> total() const { return confinement + field + interface; }
};

struct CoupledLevels {
    std::size_t n = 0;
    double lower_eV = 0.0;
    double upper_eV = 0.0;
};

/// integral exp(-2 i K0 z) |psi_n|^2 g(z) dz with g = p_V * V(z) + p_D * eF on the smooth part of V.
/// Each element is integrated in closed form, so the result does not depend on how h
/// compares with the pi/K0 oscillation.
std::complex<double> oscillatory_overlap(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                         const ValleyPairConstants& constants,
                                         std::optional<Window> window = std::nullopt);

/// Delta-function part: sum_i p_D dV_i exp(-2 i K0 z_i) |psi_n(z_i)|^2. Each z_i must be a node.
std::complex<double> interface_term(const EigenSolution& solution, std::size_t n, std::span<const PotentialJump> jumps,
                                    double p_D_nm, double k0_inv_nm);

SplittingResult valley_splitting(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                 const ValleyPairConstants& constants, std::optional<Window> window = std::nullopt);

/// Diagonalizes the degenerate pair with off-diagonal delta/2. With coupling disabled
/// the pair stays degenerate at E_n.
CoupledLevels coupled_levels(double E_n_eV, const SplittingResult& result, bool coupling_enabled = true);

/// Bulk inversion-layer estimate, meV, from n_s in 1e12 cm^-2.
double bulk_splitting_from_density_meV(double n_s_1e12_per_cm2);
/// Bulk inversion-layer estimate, meV, from F in 1e7 V/m.
double bulk_splitting_from_field_meV(double field_1e7_V_per_m);

} // namespace valleysplit
