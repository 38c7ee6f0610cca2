#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valleysplit/config.hpp"
#include "valleysplit/eigensolver.hpp"
#include "valleysplit/valley_coupling.hpp"

namespace valleysplit::oracles {

/// Brute-force reference for oscillatory_overlap: trapezoid rule on a uniform sub-grid
/// of each element (one-sided potential values at breakpoints), step and step/2, plus
/// one Richardson step. Shares nothing with the closed-form moment path.
std::complex<double> brute_force_overlap(const EigenSolution& solution, std::size_t n, const PotentialProfile& profile,
                                         const ValleyPairConstants& constants, double step_nm = 0.002);

/// Exact integral of |psi_n|^2 (Simpson per element; exact for the quadratic).
double exact_norm(const EigenSolution& solution, std::size_t n);
/// Trapezoid on the mesh nodes.
double trapezoid_norm(const EigenSolution& solution, std::size_t n);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    std::vector<std::string> notes;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::string format() const;
};

struct QuadratureCase {
    double W_nm;
    double F_V_per_m;
    std::size_t n;
};

/// Largest relative deviation (with a 1e-9 eV absolute floor) of closed form vs brute force.
struct QuadratureComparison {
    double worst_relative = 0.0;
    std::size_t cases = 0;
    std::string worst_case;
};

QuadratureComparison compare_quadrature(const SweepConfig& config, const std::vector<QuadratureCase>& cases);

/// Eigenvalue, quadrature and convergence oracles plus the invariant suites, run at the
/// configuration's mesh size, material and constants mode.
Report run_oracles(const SweepConfig& config);

} // namespace valleysplit::oracles
