#include "valleysplit/subbands.hpp"

#include <cmath>

#include "valleysplit/error.hpp"
#include "valleysplit/units.hpp"

namespace valleysplit {

SolvedWell solve_well(const WellProblem& problem) {
    auto mesh = build_mesh(problem.geometry, problem.mesh_h_nm);
    auto profile = build_profile(problem.geometry, problem.material, problem.field_V_per_m, problem.polarity);
    auto solution = solve_eigen(assemble(mesh, profile, problem.material), problem.n_states);
    return {std::move(mesh), std::move(profile), std::move(solution)};
}

SolvedWell solve_hard_wall(double width_nm, double m_z, double h_nm, std::size_t n_states, double V0_eV) {
    const double a = -0.5 * width_nm;
    const double b = 0.5 * width_nm;
    auto mesh = Mesh1D::uniform(a, b, h_nm);
    auto profile = PotentialProfile::uniform(a, b, V0_eV);
    MaterialSystem material;
    material.m_z_well = m_z;
    material.m_z_barrier = m_z;
    auto solution = solve_eigen(assemble(mesh, profile, material), n_states);
    return {std::move(mesh), std::move(profile), std::move(solution)};
}

double hard_wall_level(double width_nm, double m_z, int n) {
    const double k = units::pi * n / width_nm;
    return units::kinetic_prefactor_eV_nm2 / m_z * k * k;
}

ConvergenceStudy convergence_study(const std::function<double(double)>& ground_energy_at,
                                   std::span<const double> h_sequence, std::optional<double> exact_eV) {
    if (h_sequence.size() < 3)
        throw InvalidArgument("convergence study needs at least three mesh sizes");
    const double ratio = h_sequence[0] / h_sequence[1];
    for (std::size_t i = 1; i < h_sequence.size(); ++i) {
        const double r = h_sequence[i - 1] / h_sequence[i];
        if (!(r > 1.0) || std::abs(r - ratio) > 1e-9 * ratio)
            throw InvalidArgument("mesh sizes must decrease in geometric progression");
    }

    ConvergenceStudy study;
    for (double h : h_sequence) {
        ConvergenceRow row{h, ground_energy_at(h), std::nullopt, std::nullopt, std::nullopt};
        if (exact_eV)
            row.error_eV = row.energy_eV - *exact_eV;
        const std::size_t i = study.rows.size();
        if (i >= 2) {
            const double e0 = study.rows[i - 2].energy_eV;
            const double e1 = study.rows[i - 1].energy_eV;
            const double e2 = row.energy_eV;
            const double p = std::log((e0 - e1) / (e1 - e2)) / std::log(ratio);
            row.observed_order = p;
            row.richardson_eV = e2 + (e2 - e1) / (std::pow(ratio, p) - 1.0);
        }
        study.rows.push_back(row);
    }
    study.observed_order = *study.rows.back().observed_order;
    study.extrapolated_eV = *study.rows.back().richardson_eV;
    return study;
}

} // namespace valleysplit
