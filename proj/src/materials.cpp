#include "valleysplit/materials.hpp"

#include <cmath>

#include "valleysplit/error.hpp"
#include "valleysplit/units.hpp"

namespace valleysplit {

double MaterialSystem::k0_inv_nm() const { return k0_fraction * 2.0 * units::pi / lattice_nm; }

double MaterialSystem::k0_au() const { return units::inv_nm_to_au_wavevector(k0_inv_nm()); }

void MaterialSystem::validate() const {
    if (!(m_z_well > 0.0) || !(m_z_barrier > 0.0))
        throw InvalidArgument("material '" + name + "': effective masses must be positive");
    if (!(delta_Ec_eV > 0.0))
        throw InvalidArgument("material '" + name + "': delta_Ec_eV must be positive");
    if (!(lattice_nm > 0.0))
        throw InvalidArgument("material '" + name + "': lattice_nm must be positive");
    if (!(k0_fraction > 0.0))
        throw InvalidArgument("material '" + name + "': k0_fraction must be positive");
}

MaterialSystem sio2_si() { return MaterialSystem{}; }

MaterialSystem sige30_si() {
    MaterialSystem m;
    m.name = "sige30_si";
    m.delta_Ec_eV = 0.16;
    return m;
}

MaterialSystem material_preset(std::string_view name) {
    if (name == "sio2_si")
        return sio2_si();
    if (name == "sige30_si")
        return sige30_si();
    throw InvalidArgument("unknown material preset '" + std::string(name) + "' (expected sio2_si or sige30_si)");
}

std::string_view to_string(ConstantsMode mode) {
    return mode == ConstantsMode::analytic ? "analytic" : "paper-canonical";
}

ConstantsMode parse_constants_mode(std::string_view text) {
    if (text == "paper-canonical")
        return ConstantsMode::paper_canonical;
    if (text == "analytic")
        return ConstantsMode::analytic;
    throw InvalidArgument("unknown constants mode '" + std::string(text) +
                          "' (expected paper-canonical or analytic)");
}

ValleyPairConstants ValleyPairConstants::zeroed() const {
    ValleyPairConstants z = *this;
    z.I56 = 0.0;
    z.c_J = 0.0;
    z.p_V = 0.0;
    z.p_D_nm = 0.0;
    return z;
}

double lambda_k(double k_au, const MaterialSystem& params) {
    return 0.5 * std::atan(2.0 * params.T_ry_bohr * k_au / params.eps_G_ry);
}

namespace {

bool is_axis_vector(const AxisVector& e) {
    int nonzero = 0;
    for (double c : e) {
        if (c == 0.0)
            continue;
        if (c != 1.0 && c != -1.0)
            return false;
        ++nonzero;
    }
    return nonzero == 1;
}

} // namespace

double coupling_I(const AxisVector& e_l, const AxisVector& e_lp, double k_au, const MaterialSystem& params) {
    if (!is_axis_vector(e_l) || !is_axis_vector(e_lp))
        throw InvalidArgument("coupling_I: valley directions must be +-x, +-y or +-z unit vectors");
    const double dot = e_l[0] * e_lp[0] + e_l[1] * e_lp[1] + e_l[2] * e_lp[2];
    const double c2 = std::cos(2.0 * lambda_k(k_au, params));
    return 0.5 * (1.0 + dot) - 0.5 * (1.0 - dot) * c2;
}

ValleyPairConstants valley_pair_constants(const MaterialSystem& params, ConstantsMode mode) {
    params.validate();
    ValleyPairConstants c;
    c.mode = mode;
    c.k0_inv_nm = params.k0_inv_nm();

    const double two_lambda = 2.0 * lambda_k(params.k0_au(), params);
    const double cos2 = std::cos(two_lambda);
    const double sin2 = std::sin(two_lambda);
    c.analytic_I56 = -cos2;
    // K0 * 2 (d lambda/dK) sin(2 lambda) = tan(2l) cos^2(2l) sin(2l)
    c.analytic_c_J = sin2 * sin2 * cos2;
    // The V coefficient collects -I56 and the 2 K0 J56 from differentiating the Bloch phase.
    c.analytic_p_V = -c.analytic_I56 + 2.0 * c.analytic_c_J;

    if (mode == ConstantsMode::paper_canonical) {
        c.I56 = c.canonical_I56;
        c.c_J = c.canonical_c_J;
        c.p_V = c.canonical_p_V;
    } else {
        c.I56 = c.analytic_I56;
        c.c_J = c.analytic_c_J;
        c.p_V = c.analytic_p_V;
    }
    c.p_D_nm = c.c_J / c.k0_inv_nm;
    return c;
}

} // namespace valleysplit
