#include "doctest.h"

#include <cmath>

#include "valleysplit/error.hpp"
#include "valleysplit/fem.hpp"
#include "valleysplit/mesh.hpp"
#include "valleysplit/units.hpp"

using namespace valleysplit;

TEST_CASE("build_mesh places interfaces on nodes") {
    const WellGeometry g{6.0, 6.0};
    const auto m = build_mesh(g, 0.05);
    CHECK(m.node_count() == 361);
    CHECK(m.nodes().front() == -9.0);
    CHECK(m.nodes().back() == 9.0);
    REQUIRE(m.node_index(-3.0));
    REQUIRE(m.node_index(3.0));
    CHECK(*m.node_index(-3.0) == 120);
    CHECK(*m.node_index(3.0) == 240);
    CHECK(m.nodes()[120] == -3.0);
    CHECK(m.nodes()[240] == 3.0);
    CHECK(m.max_element_length() <= 0.05 * (1.0 + 1e-12));
    CHECK(m.min_element_length() > 0.0);
    CHECK_FALSE(m.node_index(0.0123));
    CHECK(m.regions()[0] == Region::barrier);
    CHECK(m.regions()[120] == Region::well);
    CHECK(m.regions()[240] == Region::barrier);
}

TEST_CASE("mesh rounding and domain") {
    const auto coarse = build_mesh({6.0, 6.0}, 10.0);
    CHECK(coarse.element_count() == 3);
    CHECK(coarse.node_count() == 4);
    const auto m8 = build_mesh({8.0, 6.0}, 0.07);
    CHECK(m8.nodes().front() == -10.0);
    CHECK(m8.nodes().back() == 10.0);
    CHECK(m8.node_index(-4.0));
    CHECK(m8.node_index(4.0));
    CHECK(m8.max_element_length() <= 0.07);
    CHECK_THROWS_AS(build_mesh({6.0, 6.0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(build_mesh({-1.0, 6.0}, 0.05), InvalidArgument);
    CHECK_THROWS_AS(Mesh1D::uniform(1.0, 1.0, 0.1), InvalidArgument);
}

TEST_CASE("P1 stencils on a uniform mesh") {
    const double h = 0.1;
    const auto mesh = Mesh1D::uniform(0.0, 1.0, h);
    MaterialSystem mat;
    mat.m_z_well = 0.5;
    const auto fm = assemble(mesh, PotentialProfile::uniform(0.0, 1.0, 0.0), mat);
    const double k = units::kinetic_prefactor_eV_nm2 / (0.5 * h);
    REQUIRE(fm.dimension() == 9);
    for (std::size_t i = 0; i < fm.dimension(); ++i) {
        CHECK(fm.hamiltonian.diag[i] == doctest::Approx(2.0 * k).epsilon(1e-13));
        CHECK(fm.overlap.diag[i] == doctest::Approx(2.0 * h / 3.0).epsilon(1e-13));
    }
    for (std::size_t i = 0; i + 1 < fm.dimension(); ++i) {
        CHECK(fm.hamiltonian.off[i] == doctest::Approx(-k).epsilon(1e-13));
        CHECK(fm.overlap.off[i] == doctest::Approx(h / 6.0).epsilon(1e-13));
    }
}

TEST_CASE("linear potential is integrated exactly") {
    // compare the assembled potential contribution with Gauss-Legendre (exact for cubics)
    const auto mesh = Mesh1D::uniform(-1.0, 1.0, 0.25);
    MaterialSystem mat;
    const auto prof = PotentialProfile::uniform(-1.0, 1.0, 0.3, 0.7);
    const auto with_v = assemble(mesh, prof, mat);
    const auto without = assemble(mesh, PotentialProfile::uniform(-1.0, 1.0, 0.0), mat);
    const auto& z = mesh.nodes();
    const double gp = 1.0 / std::sqrt(3.0);
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
        // diagonal: int V phi_i^2 over the two neighbouring elements
        double ref = 0.0, ref_off = 0.0;
        for (int side = 0; side < 2; ++side) {
            const double a = z[i - 1 + side], b = z[i + side];
            for (double s : {-gp, gp}) {
                const double x = 0.5 * (a + b) + 0.5 * (b - a) * s;
                const double phi_i = side == 0 ? (x - a) / (b - a) : (b - x) / (b - a);
                ref += 0.5 * (b - a) * (0.3 + 0.7 * x) * phi_i * phi_i;
                if (side == 1 && i + 2 < z.size()) {
                    const double phi_j = (x - a) / (b - a);
                    ref_off += 0.5 * (b - a) * (0.3 + 0.7 * x) * phi_i * phi_j;
                }
            }
        }
        const std::size_t r = i - 1;
        CHECK(with_v.hamiltonian.diag[r] - without.hamiltonian.diag[r] == doctest::Approx(ref).epsilon(1e-12));
        if (i + 2 < z.size())
            CHECK(with_v.hamiltonian.off[r] - without.hamiltonian.off[r] == doctest::Approx(ref_off).epsilon(1e-12));
    }
}

TEST_CASE("assembly rejects misaligned meshes") {
    const WellGeometry g{6.0, 6.0};
    const auto prof = build_profile(g, sio2_si(), 0.0);
    CHECK_THROWS_AS(assemble(Mesh1D::uniform(-9.0, 9.0, 0.11), prof, sio2_si()), InvalidArgument);
    CHECK_THROWS_AS(assemble(build_mesh({6.0, 5.0}, 0.05), prof, sio2_si()), InvalidArgument);
    CHECK_NOTHROW(assemble(build_mesh(g, 0.05), prof, sio2_si()));
}

TEST_CASE("barrier mass enters the barrier elements only") {
    const WellGeometry g{6.0, 6.0};
    auto mat = sio2_si();
    const auto mesh = build_mesh(g, 0.5);
    const auto prof = build_profile(g, mat, 0.0);
    const auto a = assemble(mesh, prof, mat);
    mat.m_z_barrier = 0.5;
    const auto b = assemble(mesh, prof, mat);
    const auto i_mid = static_cast<std::size_t>(*mesh.node_index(0.0)) - 1;
    CHECK(a.hamiltonian.diag[i_mid] == b.hamiltonian.diag[i_mid]);
    CHECK(a.hamiltonian.diag[0] != b.hamiltonian.diag[0]);
}
