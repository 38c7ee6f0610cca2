#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "valleysplit/eigensolver.hpp"
#include "valleysplit/fem.hpp"
#include "valleysplit/mesh.hpp"
#include "valleysplit/potential.hpp"

namespace valleysplit {

/// Everything needed to solve one quantum-well point.
struct WellProblem {
    WellGeometry geometry;
    MaterialSystem material;
    double field_V_per_m = 0.0;
    FieldPolarity polarity = FieldPolarity::toward_right;
    std::size_t n_states = 3;
    double mesh_h_nm = 0.05;
};

struct SolvedWell {
    Mesh1D mesh;
    PotentialProfile profile;
    EigenSolution solution;
};

SolvedWell solve_well(const WellProblem& problem);

/// Hard walls at +-width/2, constant potential V0 inside.
SolvedWell solve_hard_wall(double width_nm, double m_z, double h_nm, std::size_t n_states, double V0_eV = 0.0);

/// hbar^2 pi^2 n^2 / (2 m W^2) in eV.
double hard_wall_level(double width_nm, double m_z, int n);

struct ConvergenceRow {
    double h_nm;
    double energy_eV;
    std::optional<double> error_eV;      ///< against the exact value, when known
    std::optional<double> richardson_eV; ///< from this row and the two coarser ones
    std::optional<double> observed_order;
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double observed_order = 0.0; ///< from the three finest meshes
    double extrapolated_eV = 0.0;
};

/// Ground energy at each h (>= 3 values in geometric progression, coarse to fine).
ConvergenceStudy convergence_study(const std::function<double(double)>& ground_energy_at,
                                   std::span<const double> h_sequence, std::optional<double> exact_eV = std::nullopt);

} // namespace valleysplit
