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

/**
 * @file problems.hpp
 * @brief Manufactured Navier-Stokes solutions on the unit square and cube.
 *
 * d = 2: u = (∂ψ/∂x₂, −∂ψ/∂x₁) with
 *        ψ = √3/(2π) sin²(πx₁) sin²(πx₂) sin(π(x₁+x₂+t)),
 *        p = sin(π(x₁+2x₂+t)).
 * d = 3: u = curl Ψ with Ψ_i = 8√3/(27π) sin(πx_i) Π_{j≠i} sin²(πx_j)
 *        sin(π(Σ_{j≠i} x_j + t)), p = sin(π(x₁+2x₂+x₃+t)).
 *
 * Both are divergence free, vanish on the boundary and have |u|,|p| ≤ 1.
 * The derivatives come from tools/gen_mms.py. Because ∇·u ≡ 0 the forcing
 * is f = ∂u/∂t + (u·∇)u − νΔu + ∇p.
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/detail/mms_closed_forms.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgns {

template <int Dim>
class ManufacturedProblem {
public:
    /// Row i is ∇u_i.
    using Gradient = std::array<Point<Dim>, Dim>;

    explicit ManufacturedProblem(double nu) : nu_(nu)
    {
        check_dim<Dim>();
        if (!(nu > 0.0)) throw std::invalid_argument("viscosity must be positive");
    }

    [[nodiscard]] static constexpr std::string_view name() { return Dim == 2 ? "mms2d" : "mms3d"; }
    [[nodiscard]] double viscosity() const { return nu_; }

    [[nodiscard]] static Point<Dim> velocity(const Point<Dim>& x, double t)
    {
        Point<Dim> u{};
        if constexpr (Dim == 2) {
            detail::mms::velocity_2d(x[0], x[1], t, u);
        } else {
            detail::mms::velocity_3d(x[0], x[1], x[2], t, u);
        }
        return u;
    }

    [[nodiscard]] static double pressure(const Point<Dim>& x, double t)
    {
        std::array<double, 1> p{};
        if constexpr (Dim == 2) {
            detail::mms::pressure_2d(x[0], x[1], t, p);
        } else {
            detail::mms::pressure_3d(x[0], x[1], x[2], t, p);
        }
        return p[0];
    }

    [[nodiscard]] static Gradient velocity_gradient(const Point<Dim>& x, double t)
    {
        std::array<double, Dim * Dim> g{};
        if constexpr (Dim == 2) {
            detail::mms::velocity_gradient_2d(x[0], x[1], t, g);
        } else {
            detail::mms::velocity_gradient_3d(x[0], x[1], x[2], t, g);
        }
        Gradient out{};
        for (int i = 0; i < Dim; ++i)
            for (int j = 0; j < Dim; ++j) out[i][j] = g[i * Dim + j];
        return out;
    }

    [[nodiscard]] static Point<Dim> velocity_time_derivative(const Point<Dim>& x, double t)
    {
        Point<Dim> r{};
        if constexpr (Dim == 2) {
            detail::mms::velocity_dt_2d(x[0], x[1], t, r);
        } else {
            detail::mms::velocity_dt_3d(x[0], x[1], x[2], t, r);
        }
        return r;
    }

    [[nodiscard]] static Point<Dim> velocity_laplacian(const Point<Dim>& x, double t)
    {
        Point<Dim> r{};
        if constexpr (Dim == 2) {
            detail::mms::velocity_laplacian_2d(x[0], x[1], t, r);
        } else {
            detail::mms::velocity_laplacian_3d(x[0], x[1], x[2], t, r);
        }
        return r;
    }

    [[nodiscard]] static Point<Dim> pressure_gradient(const Point<Dim>& x, double t)
    {
        Point<Dim> r{};
        if constexpr (Dim == 2) {
            detail::mms::pressure_gradient_2d(x[0], x[1], t, r);
        } else {
            detail::mms::pressure_gradient_3d(x[0], x[1], x[2], t, r);
        }
        return r;
    }

    [[nodiscard]] Point<Dim> forcing(const Point<Dim>& x, double t) const
    {
        const auto u = velocity(x, t);
        const auto grad = velocity_gradient(x, t);
        const auto dudt = velocity_time_derivative(x, t);
        const auto lap = velocity_laplacian(x, t);
        const auto gp = pressure_gradient(x, t);
        Point<Dim> f{};
        for (int i = 0; i < Dim; ++i) {
            double convect = 0.0;
            for (int j = 0; j < Dim; ++j) convect += u[j] * grad[i][j];
            f[i] = dudt[i] + convect - nu_ * lap[i] + gp[i];
        }
        return f;
    }

    [[nodiscard]] static Point<Dim> initial_velocity(const Point<Dim>& x) { return velocity(x, 0.0); }

private:
    double nu_;
};

/// Dimension implied by a problem name ("mms2d" or "mms3d").
inline int problem_dimension(std::string_view name)
{
    if (name == "mms2d") return 2;
    if (name == "mms3d") return 3;
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected mms2d or mms3d)");
}

}  // namespace lgns
