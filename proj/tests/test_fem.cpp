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
#include "lgns/fem.hpp"
#include "lgns/problems.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace lgns {
namespace {

TEST(Interpolate, ReproducesAffineFunctions)
{
    const auto m = build_unit_mesh<3>(5);
    const auto g = [](const Point<3>& x) { return 0.3 + 2.0 * x[0] - 1.5 * x[1] + 0.25 * x[2]; };
    const auto f = interpolate(m, 1, g);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 2000; ++s) {
        const Point<3> x{u(rng), u(rng), u(rng)};
        ASSERT_NEAR(f.eval(m.locate(x)), g(x), 1e-12);
    }
}

TEST(Interpolate, ConstantField)
{
    const auto m = build_unit_mesh<2>(4);
    const auto f = interpolate(m, 2, [](const Point<2>&) { return Point<2>{1.5, -2.0}; });
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        EXPECT_EQ(f.at(0, v), 1.5);
        EXPECT_EQ(f.at(1, v), -2.0);
    }
}

TEST(Interpolate, InitialVelocityVanishesOnBoundary)
{
    const auto m = build_unit_mesh<2>(16);
    const auto f = interpolate(m, 2, [](const Point<2>& x) { return ManufacturedProblem<2>::initial_velocity(x); });
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        if (!m.on_boundary(v)) continue;
        EXPECT_NEAR(f.at(0, v), 0.0, 1e-15);
        EXPECT_NEAR(f.at(1, v), 0.0, 1e-15);
    }
}

TEST(Eval, VertexAndCentroid)
{
    const auto m = build_unit_mesh<2>(3);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FEField<2> f(m, 1);
    for (double& v : f.values()) v = u(rng);
    const std::size_t k = 7;
    const auto& s = m.simplex(k);
    EXPECT_DOUBLE_EQ(f.eval(ElementLocation<2>{k, {0.0, 1.0, 0.0}}), f.at(0, s[1]));
    const double mean = (f.at(0, s[0]) + f.at(0, s[1]) + f.at(0, s[2])) / 3.0;
    EXPECT_NEAR(f.eval(ElementLocation<2>{k, {1.0 / 3, 1.0 / 3, 1.0 / 3}}), mean, 1e-15);
}

TEST(ElementGradient, LinearFields)
{
    const auto m = build_unit_mesh<2>(6);
    const auto fx = interpolate(m, 1, [](const Point<2>& x) { return x[0]; });
    const auto fl = interpolate(m, 1, [](const Point<2>& x) { return 3.0 * x[0] - 2.0 * x[1]; });
    const auto fc = interpolate(m, 1, [](const Point<2>&) { return 4.0; });
    for (std::size_t k = 0; k < m.num_simplices(); ++k) {
        const auto gx = fx.element_gradient(k);
        EXPECT_NEAR(gx[0][0], 1.0, 1e-12);
        EXPECT_NEAR(gx[0][1], 0.0, 1e-12);
        const auto gl = fl.element_gradient(k);
        EXPECT_NEAR(gl[0][0], 3.0, 1e-12);
        EXPECT_NEAR(gl[0][1], -2.0, 1e-12);
        const auto gc = fc.element_gradient(k);
        EXPECT_NEAR(std::abs(gc[0][0]) + std::abs(gc[0][1]), 0.0, 1e-12);
    }
}

TEST(DiscreteNorms, KnownValues)
{
    const auto m = build_unit_mesh<2>(8);
    const auto zero = discrete_norms(FEField<2>(m, 2));
    EXPECT_EQ(zero.l2, 0.0);
    EXPECT_EQ(zero.h1_semi, 0.0);
    EXPECT_EQ(zero.linf, 0.0);
    EXPECT_EQ(zero.w1inf, 0.0);

    const auto nx = discrete_norms(interpolate(m, 1, [](const Point<2>& x) { return x[0]; }));
    EXPECT_NEAR(nx.l2, 1.0 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(nx.h1_semi, 1.0, 1e-12);
    EXPECT_NEAR(nx.linf, 1.0, 1e-15);
    EXPECT_NEAR(nx.w1inf, 2.0, 1e-12);

    const auto nc = discrete_norms(interpolate(m, 1, [](const Point<2>&) { return -2.5; }));
    EXPECT_NEAR(nc.linf, 2.5, 1e-15);
    EXPECT_NEAR(nc.h1_semi, 0.0, 1e-12);
}

TEST(DiscreteNorms, Homogeneity)
{
    const auto m = build_unit_mesh<3>(4);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FEField<3> f(m, 3);
    for (double& v : f.values()) v = u(rng);
    const auto base = discrete_norms(f);
    for (double s : {-3.0, 0.5, 7.0}) {
        const auto scaled = discrete_norms(s * f);
        EXPECT_NEAR(scaled.l2, std::abs(s) * base.l2, 1e-12 * std::abs(s));
        EXPECT_NEAR(scaled.h1_semi, std::abs(s) * base.h1_semi, 1e-12 * std::abs(s) * base.h1_semi);
        EXPECT_NEAR(scaled.linf, std::abs(s) * base.linf, 1e-12);
    }
}

TEST(DiscreteNorms, L2MatchesMassMatrix)
{
    const auto m = build_unit_mesh<2>(10);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FEField<2> f(m, 2);
    for (double& v : f.values()) v = u(rng);
    const auto mass = assemble_mass(m, 2);
    const auto mx = mass * f.values();
    double q = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) q += f.values()[i] * mx[i];
    EXPECT_NEAR(discrete_norms(f).l2, std::sqrt(q), 1e-10);
}

TEST(FEField, RejectsBadComponentCount)
{
    const auto m = build_unit_mesh<2>(2);
    EXPECT_THROW(FEField<2>(m, 3), std::invalid_argument);
    EXPECT_THROW(FEField<2>(m, 1, std::vector<double>(3)), std::invalid_argument);
}

}  // namespace
}  // namespace lgns
