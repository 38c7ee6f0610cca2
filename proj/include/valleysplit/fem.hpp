#pragma once

#include <vector>

#include "valleysplit/materials.hpp"
#include "valleysplit/mesh.hpp"
#include "valleysplit/potential.hpp"

namespace valleysplit {

/// Symmetric tridiagonal matrix; off[i] couples rows i and i+1.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    [[nodiscard]] std::size_t size() const { return diag.size(); }
    /// y = A x
    [[nodiscard]] std::vector<double> multiply(const std::vector<double>& x) const;
};

/// P1 Galerkin pair over the interior nodes (Dirichlet edges eliminated).
struct FemMatrices {
    SymTridiagonal hamiltonian; ///< eV
    SymTridiagonal overlap;     ///< nm
    std::vector<double> nodes;  ///< all mesh nodes, edges included
    double spectrum_min_eV = 0.0;
    double spectrum_max_eV = 0.0;

    [[nodiscard]] std::size_t dimension() const { return hamiltonian.size(); }
};

/// Weak form of -d/dz (hbar^2 / 2 m(z)) d/dz + V(z), integrated exactly per element.
/// Every profile breakpoint must be a mesh node and the domains must coincide.
FemMatrices assemble(const Mesh1D& mesh, const PotentialProfile& profile, const MaterialSystem& material);

} // namespace valleysplit
