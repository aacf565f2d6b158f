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
 * @file transport.hpp
 * @brief Semi-Lagrangian upwind feet X₁(w,Δt)(x) = x − w(x)Δt and the
 *        composed values u∘X₁ needed by the characteristic right-hand side.
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/fem.hpp"
#include "lgns/mesh.hpp"
#include "lgns/quadrature.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lgns {

struct CflCheck {
    bool admissible = true;
    /// Δt‖w‖_{1,∞}
    double product = 0.0;
};

/// Δt‖w‖_{1,∞} < 1 guarantees every upwind foot stays inside the domain.
template <int Dim>
CflCheck check_cfl(const FEField<Dim>& w, double dt)
{
    CflCheck c;
    c.product = dt * w1inf_norm(w);
    c.admissible = c.product < 1.0;
    return c;
}

template <int Dim>
class UpwindEvaluator {
public:
    /// Feet that leave the closed domain by at most this much are clamped back.
    static constexpr double kClampTolerance = 1e-10;

    UpwindEvaluator(const FEField<Dim>& w, double dt) : w_(&w), dt_(dt)
    {
        if (w.components() != Dim) throw std::invalid_argument("UpwindEvaluator: w must be a vector field");
        if (dt < 0.0) throw std::invalid_argument("UpwindEvaluator: negative time increment");
    }
    UpwindEvaluator(FEField<Dim>&&, double) = delete;

    [[nodiscard]] double dt() const { return dt_; }
    [[nodiscard]] std::size_t clamp_count() const { return clamped_; }
    [[nodiscard]] std::size_t foot_count() const { return feet_; }

    /// Foot of x given its location (the location is only used to evaluate w).
    Point<Dim> upwind_point(const ElementLocation<Dim>& loc, const Point<Dim>& x)
    {
        const Point<Dim> wx = w_->eval_vector(loc);
        Point<Dim> foot{};
        bool clamped = false;
        for (int i = 0; i < Dim; ++i) {
            double y = x[i] - wx[i] * dt_;
            if (y < 0.0 || y > 1.0) {
                const double excess = y < 0.0 ? -y : y - 1.0;
                if (excess > kClampTolerance) {
                    std::ostringstream msg;
                    msg << "upwind foot leaves the domain by " << excess << " (coordinate " << i
                        << "); the CFL condition dt*|w|_{1,inf} < 1 is violated";
                    throw CflViolation(msg.str());
                }
                y = y < 0.0 ? 0.0 : 1.0;
                clamped = true;
            }
            foot[i] = y;
        }
        ++feet_;
        if (clamped) ++clamped_;
        return foot;
    }

    Point<Dim> upwind_point(const Point<Dim>& x) { return upwind_point(w_->mesh().locate(x), x); }

    /// (u∘X₁)(x_q) for every element k and quadrature point q of the
    /// degree-5 rule, laid out as [(k * nq + q) * components + c].
    std::vector<double> composed_values(const FEField<Dim>& u)
    {
        const auto& mesh = w_->mesh();
        const auto& rule = degree5_rule<Dim>();
        const std::size_t nq = rule.size();
        const int nc = u.components();
        std::vector<double> out(mesh.num_simplices() * nq * static_cast<std::size_t>(nc));
        for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
            for (std::size_t q = 0; q < nq; ++q) {
                const ElementLocation<Dim> here{k, rule.points[q]};
                const Point<Dim> x = mesh.to_physical(k, rule.points[q]);
                const Point<Dim> foot = upwind_point(here, x);
                const auto at_foot = mesh.locate(foot);
                double* dst = out.data() + (k * nq + q) * static_cast<std::size_t>(nc);
                for (int c = 0; c < nc; ++c) dst[c] = u.eval(at_foot, c);
            }
        }
        return out;
    }

private:
    const FEField<Dim>* w_;
    double dt_;
    std::size_t clamped_ = 0;
    std::size_t feet_ = 0;
};

}  // namespace lgns
