#include "valleysplit/fem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "valleysplit/error.hpp"
#include "valleysplit/units.hpp"

namespace valleysplit {

std::vector<double> SymTridiagonal::multiply(const std::vector<double>& x) const {
    const std::size_t n = size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = diag[i] * x[i];
        if (i > 0)
            s += off[i - 1] * x[i - 1];
        if (i + 1 < n)
            s += off[i] * x[i + 1];
        y[i] = s;
    }
    return y;
}

namespace {

void check_alignment(const Mesh1D& mesh, const PotentialProfile& profile) {
    const auto& nodes = mesh.nodes();
    const double tol = 1e-12 * std::max({1.0, std::abs(nodes.front()), std::abs(nodes.back())});
    if (std::abs(nodes.front() - profile.domain_min()) > tol || std::abs(nodes.back() - profile.domain_max()) > tol)
        throw InvalidArgument("mesh and potential profile cover different domains");
    for (double bp : profile.breakpoints())
        if (!mesh.node_index(bp))
            throw InvalidArgument("potential breakpoint z = " + std::to_string(bp) + " nm is not a mesh node");
}

} // namespace

FemMatrices assemble(const Mesh1D& mesh, const PotentialProfile& profile, const MaterialSystem& material) {
    check_alignment(mesh, profile);
    const std::size_t n_nodes = mesh.node_count();
    if (n_nodes < 3)
        throw InvalidArgument("mesh needs at least one interior node");

    std::vector<double> hd(n_nodes, 0.0), ho(n_nodes - 1, 0.0);
    std::vector<double> md(n_nodes, 0.0), mo(n_nodes - 1, 0.0);
    const auto& z = mesh.nodes();
    const double s = profile.slope();

    double v_min = profile.evaluate(z.front());
    double v_max = v_min;
    double stiff_max = 0.0;

    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double a = z[e];
        const double b = z[e + 1];
        const double h = b - a;
        const double mass = mesh.regions()[e] == Region::well ? material.m_z_well : material.m_z_barrier;
        const double c = units::kinetic_prefactor_eV_nm2 / mass;
        const double k = c / h;

        const double v_seg = profile.segment_values()[profile.segment_at(0.5 * (a + b))];
        const double va = v_seg + s * a;
        const double vb = v_seg + s * b;

        hd[e] += k + h * (3.0 * va + vb) / 12.0;
        hd[e + 1] += k + h * (va + 3.0 * vb) / 12.0;
        ho[e] += -k + h * (va + vb) / 12.0;

        md[e] += h / 3.0;
        md[e + 1] += h / 3.0;
        mo[e] += h / 6.0;

        v_min = std::min({v_min, va, vb});
        v_max = std::max({v_max, va, vb});
        // largest eigenvalue of the element stiffness/overlap pencil
        stiff_max = std::max(stiff_max, 12.0 * c / (h * h));
    }

    FemMatrices m;
    m.hamiltonian.diag.assign(hd.begin() + 1, hd.end() - 1);
    m.hamiltonian.off.assign(ho.begin() + 1, ho.end() - 1);
    m.overlap.diag.assign(md.begin() + 1, md.end() - 1);
    m.overlap.off.assign(mo.begin() + 1, mo.end() - 1);
    m.nodes = z;
    m.spectrum_min_eV = v_min;
    m.spectrum_max_eV = v_max + stiff_max;
    return m;
}

} // namespace valleysplit
