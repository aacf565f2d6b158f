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
 * @file quadrature.hpp
 * @brief Degree-5 symmetric quadrature on the reference triangle (7 points)
 *        and tetrahedron (15 points).
 *
 * Points are stored in barycentric coordinates; weights are measured on the
 * reference simplex, so they sum to 1/2 (triangle) or 1/6 (tetrahedron).
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/mesh.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace lgns {

template <int Dim>
struct QuadratureRule {
    std::vector<std::array<double, Dim + 1>> points;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return weights.size(); }
};

namespace detail {

inline QuadratureRule<2> make_triangle_rule()
{
    const double s15 = std::sqrt(15.0);
    QuadratureRule<2> q;
    q.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    q.weights.push_back(9.0 / 80.0);
    for (const auto& [a, w] : {std::pair{(6.0 - s15) / 21.0, (155.0 - s15) / 2400.0},
                               std::pair{(6.0 + s15) / 21.0, (155.0 + s15) / 2400.0}}) {
        const double b = 1.0 - 2.0 * a;
        q.points.push_back({a, a, b});
        q.points.push_back({a, b, a});
        q.points.push_back({b, a, a});
        for (int k = 0; k < 3; ++k) q.weights.push_back(w);
    }
    return q;
}

inline QuadratureRule<3> make_tetrahedron_rule()
{
    const double s15 = std::sqrt(15.0);
    QuadratureRule<3> q;
    q.points.push_back({0.25, 0.25, 0.25, 0.25});
    q.weights.push_back(16.0 / 135.0 / 6.0);
    for (const auto& [a, w] : {std::pair{(7.0 - s15) / 34.0, (2665.0 + 14.0 * s15) / 37800.0 / 6.0},
                               std::pair{(7.0 + s15) / 34.0, (2665.0 - 14.0 * s15) / 37800.0 / 6.0}}) {
        for (int k = 0; k < 4; ++k) {
            std::array<double, 4> p{a, a, a, a};
            p[k] = 1.0 - 3.0 * a;
            q.points.push_back(p);
            q.weights.push_back(w);
        }
    }
    // Six points on the edge-midpoint orbit.
    const double b = (5.0 - s15) / 20.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            std::array<double, 4> p{};
            p.fill(0.5 - b);
            p[i] = b;
            p[j] = b;
            q.points.push_back(p);
            q.weights.push_back(10.0 / 189.0 / 6.0);
        }
    }
    return q;
}

}  // namespace detail

/// The degree-5 rule for the reference simplex of dimension Dim.
template <int Dim>
const QuadratureRule<Dim>& degree5_rule()
{
    check_dim<Dim>();
    if constexpr (Dim == 2) {
        static const QuadratureRule<2> rule = detail::make_triangle_rule();
        return rule;
    } else {
        static const QuadratureRule<3> rule = detail::make_tetrahedron_rule();
        return rule;
    }
}

/// ∫_K f dx for element k of the mesh, using the degree-5 rule mapped affinely.
template <int Dim, class F>
double integrate_on_element(const SimplexMesh<Dim>& mesh, std::size_t k, F&& f)
{
    const auto& rule = degree5_rule<Dim>();
    const double scale = mesh.volume(k) / reference_volume<Dim>();
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        sum += rule.weights[q] * f(mesh.to_physical(k, rule.points[q]));
    }
    return scale * sum;
}

template <int Dim, class F>
double integrate(const SimplexMesh<Dim>& mesh, F&& f)
{
    double sum = 0.0;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) sum += integrate_on_element(mesh, k, f);
    return sum;
}

}  // namespace lgns
