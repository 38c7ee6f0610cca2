#include "doctest.h"

#include <cmath>
#include <numbers>

#include "valleysplit/error.hpp"
#include "valleysplit/oracles.hpp"
#include "valleysplit/subbands.hpp"
#include "valleysplit/sweep.hpp"
#include "valleysplit/units.hpp"
#include "valleysplit/valley_coupling.hpp"

using namespace valleysplit;

namespace {

SolvedWell solve(double W, double F, std::size_t n_states = 3, MaterialSystem mat = sio2_si()) {
    WellProblem p;
    p.geometry = {W, 6.0};
    p.material = std::move(mat);
    p.field_V_per_m = F;
    p.n_states = n_states;
    return solve_well(p);
}

ValleyPairConstants canonical() { return valley_pair_constants(sio2_si(), ConstantsMode::paper_canonical); }

} // namespace

TEST_CASE("vanishing potential gives no coupling") {
    const auto hw = solve_hard_wall(6.0, 0.916, 0.05, 2);
    const auto c = canonical();
    CHECK(std::abs(oscillatory_overlap(hw.solution, 0, hw.profile, c)) == 0.0);
    const auto r = valley_splitting(hw.solution, 0, hw.profile, c);
    CHECK(r.delta_eV == 0.0);
}

TEST_CASE("long-wavelength limit is p_V times the mean potential") {
    const double V0 = 0.2;
    const auto hw = solve_hard_wall(6.0, 0.916, 0.05, 1, V0);
    auto c = canonical();
    c.k0_inv_nm = 1e-9;
    const auto I = oscillatory_overlap(hw.solution, 0, hw.profile, c);
    CHECK(I.real() == doctest::Approx(1.045 * V0).epsilon(1e-9));
    CHECK(std::abs(I.imag()) < 1e-12);
}

TEST_CASE("closed form agrees with brute-force quadrature") {
    const auto c = canonical();
    for (double W : {3.0, 6.3, 8.0})
        for (double F : {0.0, 1e8}) {
            const auto s = solve(W, F);
            for (std::size_t n = 0; n < 3; ++n) {
                const auto closed = oscillatory_overlap(s.solution, n, s.profile, c);
                const auto brute = oracles::brute_force_overlap(s.solution, n, s.profile, c);
                CHECK(std::abs(closed - brute) <= 1e-6 * std::max(std::abs(brute), 1e-3));
            }
        }
}

TEST_CASE("interface term") {
    const auto c = canonical();
    SUBCASE("zero at hard walls") {
        const auto hw = solve_hard_wall(6.0, 0.916, 0.05, 1);
        const std::vector<PotentialJump> walls{{-3.0, 3.1}, {3.0, -3.1}};
        CHECK(std::abs(interface_term(hw.solution, 0, walls, c.p_D_nm, c.k0_inv_nm)) == 0.0);
    }
    SUBCASE("symmetric well is purely imaginary") {
        const auto s = solve(6.0, 0.0);
        const auto t = interface_term(s.solution, 0, s.profile.jumps(), c.p_D_nm, c.k0_inv_nm);
        const double psi2 = std::pow(s.solution.psi(0, 3.0), 2);
        CHECK(std::abs(t.real()) < 1e-14);
        CHECK(t.imag() == doctest::Approx(-2.0 * 3.1 * psi2 * std::sin(6.0 * c.k0_inv_nm) * c.p_D_nm).epsilon(1e-12));
    }
    SUBCASE("single jump toy value") {
        // |psi|^2 = 0.1 nm^-1 at one 3.1 eV step placed where the phase is 1
        const std::vector<double> nodes{-1.0, 0.0, 1.0};
        const EigenSolution sol(nodes, {0.0}, {{0.0, std::sqrt(0.1), 0.0}});
        const std::vector<PotentialJump> jump{{0.0, 3.1}};
        const auto t = interface_term(sol, 0, jump, c.p_D_nm, c.k0_inv_nm);
        CHECK(t.real() == doctest::Approx(0.1 * 3.1 * c.p_D_nm).epsilon(1e-12));
        CHECK(t.real() == doctest::Approx(0.01305).epsilon(1e-2));
    }
    SUBCASE("off-node interface throws") {
        const auto s = solve(6.0, 0.0);
        const std::vector<PotentialJump> jump{{0.0123, 1.0}};
        CHECK_THROWS_AS(interface_term(s.solution, 0, jump, c.p_D_nm, c.k0_inv_nm), InvalidArgument);
    }
    SUBCASE("linear in the band offset for a fixed envelope") {
        const auto s = solve(6.0, 5e7);
        const auto base = interface_term(s.solution, 0, s.profile.jumps(), c.p_D_nm, c.k0_inv_nm);
        auto jumps = s.profile.jumps();
        for (auto& j : jumps)
            j.dV_eV *= 2.5;
        const auto scaled = interface_term(s.solution, 0, jumps, c.p_D_nm, c.k0_inv_nm);
        CHECK(std::abs(scaled - 2.5 * base) < 1e-14);
    }
}

TEST_CASE("decomposition") {
    const auto c = canonical();
    for (double F : {0.0, 1e7, 1e8}) {
        const auto s = solve(7.0, F);
        for (std::size_t n = 0; n < 3; ++n) {
            const auto r = valley_splitting(s.solution, n, s.profile, c);
            CHECK(r.delta_eV == doctest::Approx(2.0 * std::abs(r.total())).epsilon(1e-14));
            CHECK(r.delta_eV <= 2.0 * (std::abs(r.confinement) + std::abs(r.field) + std::abs(r.interface)) + 1e-15);
            const auto smooth = oscillatory_overlap(s.solution, n, s.profile, c);
            CHECK(std::abs(smooth - (r.confinement + r.field)) < 1e-12);
            if (F == 0.0)
                CHECK(std::abs(r.field) == 0.0);
        }
    }
}

TEST_CASE("splitting magnitude is translation invariant") {
    const auto c = canonical();
    const auto s = solve(6.0, 8e7);
    const double dz = 0.35;
    const auto mesh = s.mesh.translated(dz);
    const auto profile = s.profile.translated(dz);
    const auto sol = solve_eigen(assemble(mesh, profile, sio2_si()), 3);
    for (std::size_t n = 0; n < 3; ++n) {
        const auto a = valley_splitting(s.solution, n, s.profile, c);
        const auto b = valley_splitting(sol, n, profile, c);
        CHECK(b.delta_eV == doctest::Approx(a.delta_eV).epsilon(1e-8));
    }
}

TEST_CASE("coupled levels") {
    SplittingResult r;
    r.delta_eV = 0.020;
    const auto on = coupled_levels(0.100, r);
    CHECK(on.lower_eV == doctest::Approx(0.090));
    CHECK(on.upper_eV == doctest::Approx(0.110));
    const auto off = coupled_levels(0.100, r, false);
    CHECK(off.lower_eV == 0.100);
    CHECK(off.upper_eV == 0.100);

    // zeroed constants give the same degenerate pair
    const auto s = solve(6.0, 5e7);
    const auto z = valley_splitting(s.solution, 0, s.profile, canonical().zeroed());
    CHECK(z.delta_eV == 0.0);
    const auto lv = coupled_levels(s.solution.energy(0), z);
    CHECK(lv.lower_eV == lv.upper_eV);
}

TEST_CASE("bulk inversion-layer estimates") {
    CHECK(bulk_splitting_from_density_meV(1.0) == doctest::Approx(1.14));
    CHECK(bulk_splitting_from_field_meV(10.0) == doctest::Approx(7.18));
    CHECK(bulk_splitting_from_field_meV(0.0) == 0.0);
    CHECK_THROWS_AS(bulk_splitting_from_density_meV(-1.0), InvalidArgument);
    CHECK_THROWS_AS(bulk_splitting_from_field_meV(-1.0), InvalidArgument);
}

TEST_CASE("splitting oscillates with width at zero field") {
    SweepConfig cfg;
    cfg.widths_nm = expand_range(4.0, 6.0, 0.02);
    cfg.subbands = 1;
    const auto rows = run_width_sweep(cfg, 1);
    std::vector<double> maxima;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        if (rows[i].delta_meV > rows[i - 1].delta_meV && rows[i].delta_meV >= rows[i + 1].delta_meV)
            maxima.push_back(rows[i].W_nm);
    REQUIRE(maxima.size() >= 3);
    const double period = (maxima.back() - maxima.front()) / static_cast<double>(maxima.size() - 1);
    const double expected = std::numbers::pi / canonical().k0_inv_nm;
    CHECK(period == doctest::Approx(expected).epsilon(0.1));
}

TEST_CASE("field raises the splitting of a 6 nm well") {
    double prev = -1.0;
    for (double F : {0.0, 2e7, 5e7, 1e8, 1.5e8}) {
        const auto s = solve(6.0, F, 1);
        const double d = valley_splitting(s.solution, 0, s.profile, canonical()).delta_eV;
        CHECK(d > prev);
        prev = d;
    }
}
