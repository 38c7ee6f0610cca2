#pragma once

// Internal units: energies in eV, lengths in nm.

namespace valleysplit::units {

// CODATA 2018
inline constexpr double hbar_Js = 1.054571817e-34;
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double rydberg_eV = 13.605693122994;
inline constexpr double bohr_nm = 0.0529177210903;

inline constexpr double pi = 3.14159265358979323846;

/// hbar^2 / (2 m0) in eV nm^2.
inline constexpr double kinetic_prefactor_eV_nm2 =
    hbar_Js * hbar_Js / (2.0 * electron_mass_kg) / elementary_charge_C * 1e18;

/// e*F for an electron: 1 V/m -> 1e-9 eV/nm.
inline constexpr double field_to_eV_per_nm(double field_V_per_m) { return field_V_per_m * 1e-9; }
inline constexpr double eV_per_nm_to_field(double slope_eV_per_nm) { return slope_eV_per_nm * 1e9; }

inline constexpr double rydberg_to_eV(double ry) { return ry * rydberg_eV; }
inline constexpr double eV_to_rydberg(double ev) { return ev / rydberg_eV; }

inline constexpr double bohr_to_nm(double bohr) { return bohr * bohr_nm; }
inline constexpr double nm_to_bohr(double nm) { return nm / bohr_nm; }

/// Atomic-unit wavevector (1/bohr) to 1/nm.
inline constexpr double au_wavevector_to_inv_nm(double k_au) { return k_au / bohr_nm; }
inline constexpr double inv_nm_to_au_wavevector(double k_nm) { return k_nm * bohr_nm; }

inline constexpr double eV_to_meV(double ev) { return ev * 1e3; }
inline constexpr double meV_to_eV(double mev) { return mev * 1e-3; }

inline constexpr double nm_to_angstrom(double nm) { return nm * 10.0; }

} // namespace valleysplit::units
