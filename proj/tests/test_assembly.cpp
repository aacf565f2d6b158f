// Copyright 2026 The lgns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgns/assembly.hpp"
#include "lgns/transport.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace lgns {
namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

double quad_form(const CsrMatrix& a, const std::vector<double>& x, const std::vector<double>& y)
{
    return dot(x, a * y);
}

template <int Dim>
double relative_defect(const CsrMatrix& a)
{
    double scale = 0.0;
    for (double v : a.values()) scale = std::max(scale, std::abs(v));
    return symmetry_defect(a) / scale;
}

TEST(Mass, TotalIsDomainVolume)
{
    for (int n : {2, 5}) {
        const auto m2 = build_unit_mesh<2>(n);
        const auto mm2 = assemble_mass(m2, 1);
        const std::vector<double> one2(m2.num_vertices(), 1.0);
        EXPECT_NEAR(quad_form(mm2, one2, one2), 1.0, 1e-13);
        const auto m3 = build_unit_mesh<3>(n);
        const auto mm3 = assemble_mass(m3, 1);
        const std::vector<double> one3(m3.num_vertices(), 1.0);
        EXPECT_NEAR(quad_form(mm3, one3, one3), 1.0, 1e-13);
    }
}

TEST(Mass, MatchesQuadratureOfProducts)
{
    const auto m = build_unit_mesh<2>(4);
    const auto mass = assemble_mass(m, 1);
    const auto f = interpolate(m, 1, [](const Point<2>& x) { return 1.0 + x[0] * x[0] - x[1]; });
    const auto g = interpolate(m, 1, [](const Point<2>& x) { return std::cos(x[0] + 2.0 * x[1]); });
    double oracle = 0.0;
    for (std::size_t k = 0; k < m.num_simplices(); ++k) {
        std::array<std::array<double, 2>, 3> v{};
        for (int a = 0; a < 3; ++a) v[a] = m.vertex(m.simplex(k)[a]);
        oracle += oracle::triangle_integral(v, [&](double x, double y) {
            const auto loc = ElementLocation<2>{k, m.barycentric(k, {x, y})};
            return f.eval(loc) * g.eval(loc);
        });
    }
    const std::vector<double> fv(f.values().begin(), f.values().end());
    const std::vector<double> gv(g.values().begin(), g.values().end());
    EXPECT_NEAR(quad_form(mass, fv, gv), oracle, 1e-13);
}

TEST(Mass, VectorBlocksAreIndependent)
{
    const auto m = build_unit_mesh<3>(2);
    const auto mass = assemble_mass(m, 3);
    const std::size_t nv = m.num_vertices();
    EXPECT_EQ(mass.rows(), 3 * nv);
    EXPECT_EQ(mass.at(0, nv), 0.0);
    EXPECT_EQ(mass.at(nv + 1, nv + 1), mass.at(1, 1));
}

template <int Dim>
void viscous_symmetric_and_rigid_kernel()
{
    const auto m = build_unit_mesh<Dim>(4);
    const auto a = assemble_viscous(m, 0.37);
    EXPECT_LE(relative_defect<Dim>(a), 1e-12);

    // Rigid motions x ↦ c + Ωx with Ω skew.
    std::vector<FEField<Dim>> rigid;
    rigid.push_back(interpolate(m, Dim, [](const Point<Dim>&) {
        Point<Dim> c{};
        c.fill(1.0);
        c[0] = -0.5;
        return c;
    }));
    rigid.push_back(interpolate(m, Dim, [](const Point<Dim>& x) {
        Point<Dim> r{};
        r[0] = -x[1];
        r[1] = x[0];
        return r;
    }));
    if constexpr (Dim == 3) {
        rigid.push_back(interpolate(m, 3, [](const Point<3>& x) { return Point<3>{0.0, -x[2], x[1]}; }));
    }
    double scale = 0.0;
    for (double v : a.values()) scale = std::max(scale, std::abs(v));
    for (const auto& r : rigid) {
        const auto ar = a * r.values();
        for (double v : ar) ASSERT_NEAR(v, 0.0, 1e-12 * scale);
    }
}

TEST(Viscous, SymmetricWithRigidKernel2d) { viscous_symmetric_and_rigid_kernel<2>(); }
TEST(Viscous, SymmetricWithRigidKernel3d) { viscous_symmetric_and_rigid_kernel<3>(); }

template <int Dim>
void viscous_matches_strain_energy()
{
    const double nu = 0.21;
    const auto m = build_unit_mesh<Dim>(3);
    const auto a = assemble_viscous(m, nu);
    const auto uv = random_vector(Dim * m.num_vertices(), 3);
    const auto vv = random_vector(Dim * m.num_vertices(), 4);
    const FEField<Dim> u(m, Dim, uv);
    const FEField<Dim> v(m, Dim, vv);
    double oracle = 0.0;
    for (std::size_t k = 0; k < m.num_simplices(); ++k) {
        const auto gu = u.element_gradient(k);
        const auto gv = v.element_gradient(k);
        double s = 0.0;
        for (int i = 0; i < Dim; ++i)
            for (int j = 0; j < Dim; ++j) s += 0.25 * (gu[i][j] + gu[j][i]) * (gv[i][j] + gv[j][i]);
        oracle += 2.0 * nu * m.volume(k) * s;
    }
    EXPECT_NEAR(quad_form(a, vv, uv), oracle, 1e-12 * std::abs(oracle) + 1e-13);
}

TEST(Viscous, MatchesSymmetricGradientForm2d) { viscous_matches_strain_energy<2>(); }
TEST(Viscous, MatchesSymmetricGradientForm3d) { viscous_matches_strain_energy<3>(); }

TEST(Viscous, PositiveOnInteriorFields)
{
    const auto m = build_unit_mesh<2>(5);
    const auto a = assemble_viscous(m, 1.0);
    for (unsigned seed = 0; seed < 5; ++seed) {
        FEField<2> u(m, 2, random_vector(2 * m.num_vertices(), seed));
        zero_boundary(u);
        const std::vector<double> x(u.values().begin(), u.values().end());
        EXPECT_GT(quad_form(a, x, x), 0.0);
    }
}

TEST(Divergence, IntegratesAgainstPressureBasis)
{
    const auto m = build_unit_mesh<3>(3);
    const auto b = assemble_divergence(m);
    ASSERT_EQ(b.rows(), m.num_vertices());
    ASSERT_EQ(b.cols(), 3 * m.num_vertices());
    const auto u = interpolate(m, 3, [](const Point<3>& x) { return Point<3>{2.0 * x[0], -x[1], 0.5 * x[2] + x[0]}; });
    const auto q = interpolate(m, 1, [](const Point<3>& x) { return x[1] + 1.0; });
    // div u = 1.5, so b(u, q) = −1.5 ∫ q = −1.5 · 1.5.
    const auto bu = b * u.values();
    double s = 0.0;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) s += q.at(0, v) * bu[v];
    EXPECT_NEAR(s, -2.25, 1e-13);
}

TEST(Stabilization, KernelIsConstants)
{
    const auto m = build_unit_mesh<2>(6);
    const auto c = assemble_stabilization(m, 1.0);
    EXPECT_LE(relative_defect<2>(c), 1e-12);
    const std::vector<double> one(m.num_vertices(), 1.0);
    for (double v : c * one) EXPECT_NEAR(v, 0.0, 1e-15);
    const auto p = random_vector(m.num_vertices(), 9);
    EXPECT_GT(quad_form(c, p, p), 0.0);
}

TEST(Stabilization, LinearPressureEnergy)
{
    for (int n : {4, 8}) {
        const auto m2 = build_unit_mesh<2>(n);
        const auto p2 = interpolate(m2, 1, [](const Point<2>& x) { return x[0]; });
        const std::vector<double> v2(p2.values().begin(), p2.values().end());
        const double h2 = m2.mesh_size();
        EXPECT_NEAR(quad_form(assemble_stabilization(m2, 1.0), v2, v2), h2 * h2, 1e-12);

        const auto m3 = build_unit_mesh<3>(n);
        const auto p3 = interpolate(m3, 1, [](const Point<3>& x) { return x[0]; });
        const std::vector<double> v3(p3.values().begin(), p3.values().end());
        const double h3 = m3.mesh_size();
        EXPECT_NEAR(quad_form(assemble_stabilization(m3, 0.5), v3, v3), 0.5 * h3 * h3, 1e-12);
    }
}

TEST(Stabilization, LinearInDelta)
{
    const auto m = build_unit_mesh<2>(3);
    const auto c1 = assemble_stabilization(m, 1.0);
    const auto c2 = assemble_stabilization(m, 2.0);
    ASSERT_EQ(c1.nnz(), c2.nnz());
    for (std::size_t i = 0; i < c1.nnz(); ++i) EXPECT_DOUBLE_EQ(c2.values()[i], 2.0 * c1.values()[i]);
}

TEST(PressureMass, SumsToVolume)
{
    const auto m = build_unit_mesh<3>(4);
    const auto mv = pressure_mass_vector(m);
    double s = 0.0;
    for (double v : mv) s += v;
    EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST(DofMap, CountsAndOrdering)
{
    const auto m = build_unit_mesh<2>(4);
    const DofMap<2> d(m);
    EXPECT_EQ(d.num_interior(), 9u);
    EXPECT_EQ(d.num_velocity(), 18u);
    EXPECT_EQ(d.num_pressure(), 25u);
    EXPECT_EQ(d.size(), 44u);
    EXPECT_EQ(d.multiplier_index(), 43u);
    const auto vm = d.velocity_map();
    EXPECT_EQ(vm[0], -1);
    EXPECT_EQ(vm[6], 0);
    EXPECT_EQ(vm[25 + 6], 9);
}

template <int Dim>
void saddle_structure(int n)
{
    const auto m = build_unit_mesh<Dim>(n);
    const auto sys = assemble_system(m, 0.1, 0.05, 1.0);
    EXPECT_EQ(sys.rows(), sys.dofs.size());
    EXPECT_LE(relative_defect<Dim>(sys.op), 1e-12);
    const std::size_t mi = sys.dofs.multiplier_index();
    EXPECT_EQ(sys.op.at(mi, mi), 0.0);
    double msum = 0.0;
    for (std::size_t v = 0; v < sys.dofs.num_pressure(); ++v) msum += sys.op.at(mi, sys.dofs.pressure_offset() + v);
    EXPECT_NEAR(msum, 1.0, 1e-14);
    // The pressure block is −C.
    const std::size_t po = sys.dofs.pressure_offset();
    EXPECT_NEAR(sys.op.at(po + 3, po + 3), -sys.c.at(3, 3), 1e-15);
}

TEST(Saddle, Structure2d) { saddle_structure<2>(4); }
TEST(Saddle, Structure3d) { saddle_structure<3>(3); }

TEST(Saddle, PackUnpackRoundTrip)
{
    const auto m = build_unit_mesh<2>(5);
    const auto sys = assemble_system(m, 0.1, 0.1, 1.0);
    FEField<2> u(m, 2, random_vector(2 * m.num_vertices(), 1));
    zero_boundary(u);
    const FEField<2> p(m, 1, random_vector(m.num_vertices(), 2));
    const auto x = sys.pack(u, p);
    const auto [u2, p2] = sys.unpack(m, x);
    for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(u.values()[i], u2.values()[i]);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p.values()[i], p2.values()[i]);
    EXPECT_EQ(x[sys.dofs.multiplier_index()], 0.0);
}

TEST(Saddle, StokesOperatorHasNoMass)
{
    const auto m = build_unit_mesh<2>(4);
    const auto stokes = assemble_saddle(m, 0.3, 0.0, 1.0);
    const auto viscous = assemble_viscous(m, 0.3);
    const auto vm = stokes.dofs.velocity_map();
    for (std::size_t i = 0; i < vm.size(); ++i) {
        if (vm[i] < 0) continue;
        const auto r = static_cast<std::size_t>(vm[i]);
        EXPECT_NEAR(stokes.a.at(r, r), viscous.at(i, i), 1e-15);
    }
}

TEST(Rhs, ConstantForcingLoadIntegratesToOne)
{
    const auto m = build_unit_mesh<2>(6);
    const std::vector<double> composed(m.num_simplices() * degree5_rule<2>().size() * 2, 0.0);
    const auto load = assemble_velocity_load(m, composed, 0.1, [](const Point<2>&, double) { return Point<2>{1.0, 0.0}; }, 0.0);
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        s0 += load[v];
        s1 += load[m.num_vertices() + v];
    }
    EXPECT_NEAR(s0, 1.0, 1e-13);
    EXPECT_NEAR(s1, 0.0, 1e-15);
}

template <int Dim>
void zero_velocity_transport_is_mass_action(int n)
{
    const double dt = 0.05;
    const auto m = build_unit_mesh<Dim>(n);
    const auto sys = assemble_system(m, 0.1, dt, 1.0);
    FEField<Dim> u(m, Dim, random_vector(Dim * m.num_vertices(), 17));
    zero_boundary(u);
    const FEField<Dim> still(m, Dim);
    UpwindEvaluator<Dim> transport(still, dt);
    const auto rhs = assemble_rhs(sys, u, transport, [](const Point<Dim>&, double) { return Point<Dim>{}; }, dt);
    auto mu = assemble_mass(m, Dim) * u.values();
    for (double& v : mu) v /= dt;
    const auto expected = sys.restrict_velocity(mu);
    for (std::size_t i = 0; i < expected.size(); ++i) ASSERT_NEAR(rhs[i], expected[i], 1e-10);
    for (std::size_t i = expected.size(); i < rhs.size(); ++i) ASSERT_EQ(rhs[i], 0.0);
}

TEST(Rhs, ZeroVelocityTransportIsMassAction2d) { zero_velocity_transport_is_mass_action<2>(6); }
TEST(Rhs, ZeroVelocityTransportIsMassAction3d) { zero_velocity_transport_is_mass_action<3>(3); }

TEST(Rhs, PolynomialForcingIsIntegratedExactly)
{
    const auto m = build_unit_mesh<2>(5);
    const double t = 0.4;
    // Degree 4 in x, so the load integrand has degree 5.
    const auto f = [](const Point<2>& x, double s) {
        return Point<2>{x[0] * x[0] * x[1] * x[1] + s, s * x[0] * x[0] * x[0] * x[1] - x[1]};
    };
    const std::vector<double> composed(m.num_simplices() * degree5_rule<2>().size() * 2, 0.0);
    const auto load = assemble_velocity_load(m, composed, 1.0, f, t);
    for (std::size_t v : {0u, 7u, 18u}) {
        double o0 = 0.0, o1 = 0.0;
        for (std::size_t k = 0; k < m.num_simplices(); ++k) {
            const auto& s = m.simplex(k);
            int local = -1;
            for (int a = 0; a < 3; ++a)
                if (s[a] == v) local = a;
            if (local < 0) continue;
            std::array<std::array<double, 2>, 3> pts{};
            for (int a = 0; a < 3; ++a) pts[a] = m.vertex(s[a]);
            for (int c = 0; c < 2; ++c) {
                (c == 0 ? o0 : o1) += oracle::triangle_integral(pts, [&](double x, double y) {
                    return f({x, y}, t)[c] * m.barycentric(k, {x, y})[local];
                });
            }
        }
        EXPECT_NEAR(load[v], o0, 1e-14);
        EXPECT_NEAR(load[m.num_vertices() + v], o1, 1e-14);
    }
}

}  // namespace
}  // namespace lgns
