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

#include "lgns/transport.hpp"
#include "lgns/problems.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace lgns {
namespace {

template <int Dim>
FEField<Dim> constant_field(const SimplexMesh<Dim>& m, Point<Dim> c)
{
    return interpolate(m, Dim, [c](const Point<Dim>&) { return c; });
}

TEST(CheckCfl, Products)
{
    const auto m = build_unit_mesh<2>(4);
    const auto zero = check_cfl(FEField<2>(m, 2), 0.3);
    EXPECT_TRUE(zero.admissible);
    EXPECT_EQ(zero.product, 0.0);

    const auto small = check_cfl(constant_field<2>(m, {0.2, 0.0}), 1.0);
    EXPECT_TRUE(small.admissible);
    EXPECT_NEAR(small.product, 0.2, 1e-15);

    const auto big = check_cfl(constant_field<2>(m, {0.0, 3.0}), 0.5);
    EXPECT_FALSE(big.admissible);
    EXPECT_NEAR(big.product, 1.5, 1e-15);
}

TEST(UpwindPoint, ZeroVelocityIsIdentity)
{
    const auto m = build_unit_mesh<3>(3);
    const FEField<3> w(m, 3);
    UpwindEvaluator<3> up(w, 0.7);
    const Point<3> x{0.31, 0.77, 0.05};
    EXPECT_EQ(up.upwind_point(x), x);
}

TEST(UpwindPoint, ConstantVelocity)
{
    const auto m = build_unit_mesh<2>(4);
    const auto w = constant_field<2>(m, {1.0, 0.0});
    UpwindEvaluator<2> up(w, 0.1);
    const auto y = up.upwind_point({0.5, 0.5});
    EXPECT_NEAR(y[0], 0.4, 1e-15);
    EXPECT_NEAR(y[1], 0.5, 1e-15);
}

TEST(UpwindPoint, ClampsRoundingButRejectsRealExits)
{
    const auto m = build_unit_mesh<2>(4);
    const auto w = constant_field<2>(m, {1.0, 0.0});
    UpwindEvaluator<2> tiny(w, 1e-11);
    const auto y = tiny.upwind_point({0.0, 0.5});
    EXPECT_EQ(y[0], 0.0);
    EXPECT_EQ(tiny.clamp_count(), 1u);

    UpwindEvaluator<2> big(w, 1e-3);
    EXPECT_THROW((void)big.upwind_point({0.0, 0.5}), CflViolation);
}

TEST(ComposedValues, ZeroVelocityOrZeroStepSamplesInPlace)
{
    const auto m = build_unit_mesh<2>(5);
    const auto u = interpolate(m, 2, [](const Point<2>& x) { return Point<2>{std::sin(3 * x[0]), x[1] * x[1]}; });
    const auto w = interpolate(m, 2, [](const Point<2>& x) { return ManufacturedProblem<2>::velocity(x, 0.0); });
    const auto& rule = degree5_rule<2>();

    const FEField<2> zero(m, 2);
    UpwindEvaluator<2> still(zero, 0.1);
    UpwindEvaluator<2> frozen(w, 0.0);
    const auto a = still.composed_values(u);
    const auto b = frozen.composed_values(u);
    for (std::size_t k = 0; k < m.num_simplices(); ++k)
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const ElementLocation<2> loc{k, rule.points[q]};
            for (int c = 0; c < 2; ++c) {
                const std::size_t idx = (k * rule.size() + q) * 2 + c;
                EXPECT_NEAR(a[idx], u.eval(loc, c), 1e-14);
                EXPECT_NEAR(b[idx], u.eval(loc, c), 1e-14);
            }
        }
}

TEST(ComposedValues, LinearFieldEvaluatedAtFeet)
{
    const auto m = build_unit_mesh<2>(8);
    const auto lin = [](const Point<2>& x) { return 1.0 + 2.0 * x[0] - 0.5 * x[1]; };
    const auto u = interpolate(m, 1, lin);
    auto w = interpolate(m, 2, [](const Point<2>& x) { return ManufacturedProblem<2>::velocity(x, 0.3); });
    const double dt = 0.5 / w1inf_norm(w);
    UpwindEvaluator<2> up(w, dt);
    const auto vals = up.composed_values(u);
    const auto& rule = degree5_rule<2>();
    for (std::size_t k = 0; k < m.num_simplices(); ++k)
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const ElementLocation<2> loc{k, rule.points[q]};
            const auto x = m.to_physical(k, rule.points[q]);
            const auto wx = w.eval_vector(loc);
            const Point<2> foot{x[0] - dt * wx[0], x[1] - dt * wx[1]};
            ASSERT_NEAR(vals[k * rule.size() + q], lin(foot), 1e-12);
        }
}

template <int Dim>
void feet_stay_inside(int n)
{
    const auto m = build_unit_mesh<Dim>(n);
    const auto w = interpolate(m, Dim, [](const Point<Dim>& x) { return ManufacturedProblem<Dim>::velocity(x, 0.0); });
    const double dt = 0.99 / w1inf_norm(w);
    ASSERT_TRUE(check_cfl(w, dt).admissible);
    UpwindEvaluator<Dim> up(w, dt);
    ASSERT_NO_THROW((void)up.composed_values(w));
    EXPECT_EQ(up.foot_count(), m.num_simplices() * degree5_rule<Dim>().size());
    EXPECT_LE(static_cast<double>(up.clamp_count()), 1e-3 * static_cast<double>(up.foot_count()));
}

TEST(ComposedValues, FeetStayInsideUnderCfl2d) { feet_stay_inside<2>(32); }
TEST(ComposedValues, FeetStayInsideUnderCfl3d) { feet_stay_inside<3>(8); }

}  // namespace
}  // namespace lgns
