#pragma once

#include <cstddef>
#include <vector>

#include "valleysplit/fem.hpp"

namespace valleysplit {

/// Lowest subbands of one valley: energies ascending, piecewise-linear envelopes
/// normalized so that the exact integral of |psi|^2 is 1 (psi in nm^-1/2).
class EigenSolution {
public:
    EigenSolution(std::vector<double> nodes_nm, std::vector<double> energies_eV,
                  std::vector<std::vector<double>> coefficients);

    [[nodiscard]] std::size_t state_count() const { return energies_.size(); }
    [[nodiscard]] const std::vector<double>& energies() const { return energies_; }
    [[nodiscard]] double energy(std::size_t n) const;
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    /// Nodal values of psi_n including the zero edge values.
    [[nodiscard]] const std::vector<double>& coefficients(std::size_t n) const;

    /// Linear interpolation of psi_n; exact at nodes.
    [[nodiscard]] double psi(std::size_t n, double z_nm) const;

private:
    std::vector<double> nodes_;
    std::vector<double> energies_;
    std::vector<std::vector<double>> coefficients_;
};

/// Number of generalized eigenvalues of (H, M) strictly below lambda (Sylvester inertia of H - lambda M).
std::size_t count_eigenvalues_below(const SymTridiagonal& H, const SymTridiagonal& M, double lambda);

/// Lowest n_states eigenpairs of H c = E M c for the tridiagonal pencil, by Sturm
/// bisection followed by inverse iteration. Eigenvectors are M-orthonormal and signed
/// so the first nonzero interior coefficient is positive.
EigenSolution solve_eigen(const FemMatrices& matrices, std::size_t n_states);

inline double evaluate_psi(const EigenSolution& solution, std::size_t n, double z_nm) { return solution.psi(n, z_nm); }

} // namespace valleysplit
