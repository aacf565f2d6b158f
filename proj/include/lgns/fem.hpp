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
 * @file fem.hpp
 * @brief Continuous P1 fields on a SimplexMesh.
 *
 * Nodal values are stored component-major: all values of component 0 for
 * every vertex, then component 1, and so on.
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/mesh.hpp"
#include "lgns/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace lgns {

template <int Dim>
class FEField {
public:
    using Mesh = SimplexMesh<Dim>;
    /// Rows are components, columns are spatial derivatives. Only the first
    /// components() rows are meaningful.
    using Gradient = std::array<Point<Dim>, Dim>;

    FEField(const Mesh& mesh, int components)
        : mesh_(&mesh), components_(components), values_(static_cast<std::size_t>(components) * mesh.num_vertices())
    {
        if (components != 1 && components != Dim) {
            throw std::invalid_argument("FEField: components must be 1 or the mesh dimension");
        }
    }

    FEField(const Mesh& mesh, int components, std::vector<double> values) : FEField(mesh, components)
    {
        if (values.size() != values_.size()) throw std::invalid_argument("FEField: value count mismatch");
        values_ = std::move(values);
    }

    [[nodiscard]] const Mesh& mesh() const { return *mesh_; }
    [[nodiscard]] int components() const { return components_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    [[nodiscard]] std::span<double> values() { return values_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }

    [[nodiscard]] double& at(int c, std::size_t v) { return values_[c * mesh_->num_vertices() + v]; }
    [[nodiscard]] double at(int c, std::size_t v) const { return values_[c * mesh_->num_vertices() + v]; }

    /// Component c at a located point.
    [[nodiscard]] double eval(const ElementLocation<Dim>& loc, int c = 0) const
    {
        const auto& s = mesh_->simplex(loc.element);
        double r = 0.0;
        for (int a = 0; a <= Dim; ++a) r += loc.barycentric[a] * at(c, s[a]);
        return r;
    }

    /// All components at a located point; out must hold components() values.
    void eval(const ElementLocation<Dim>& loc, std::span<double> out) const
    {
        for (int c = 0; c < components_; ++c) out[c] = eval(loc, c);
    }

    [[nodiscard]] Point<Dim> eval_vector(const ElementLocation<Dim>& loc) const
    {
        Point<Dim> r{};
        for (int c = 0; c < components_; ++c) r[c] = eval(loc, c);
        return r;
    }

    /// Constant gradient of the field on element k.
    [[nodiscard]] Gradient element_gradient(std::size_t k) const
    {
        const auto& s = mesh_->simplex(k);
        const auto& g = mesh_->shape_gradients(k);
        Gradient grad{};
        for (int c = 0; c < components_; ++c) {
            for (int a = 0; a <= Dim; ++a) {
                const double val = at(c, s[a]);
                for (int j = 0; j < Dim; ++j) grad[c][j] += val * g[a][j];
            }
        }
        return grad;
    }

    FEField& operator+=(const FEField& o)
    {
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    FEField& operator-=(const FEField& o)
    {
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    FEField& operator*=(double s)
    {
        for (double& v : values_) v *= s;
        return *this;
    }
    friend FEField operator-(FEField a, const FEField& b) { return a -= b; }
    friend FEField operator*(double s, FEField a) { return a *= s; }

private:
    const Mesh* mesh_;
    int components_;
    std::vector<double> values_;
};

/// Lagrange interpolant: nodal values of g. g(x) returns a double for a
/// scalar field or an indexable value with `components` entries.
template <int Dim, class G>
FEField<Dim> interpolate(const SimplexMesh<Dim>& mesh, int components, G&& g)
{
    FEField<Dim> field(mesh, components);
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        const auto value = g(mesh.vertex(v));
        if constexpr (std::is_arithmetic_v<std::decay_t<decltype(value)>>) {
            field.at(0, v) = value;
        } else {
            for (int c = 0; c < components; ++c) field.at(c, v) = value[c];
        }
    }
    return field;
}

/// Set every boundary vertex value to zero, all components.
template <int Dim>
void zero_boundary(FEField<Dim>& field)
{
    const auto& mesh = field.mesh();
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        if (!mesh.on_boundary(v)) continue;
        for (int c = 0; c < field.components(); ++c) field.at(c, v) = 0.0;
    }
}

struct DiscreteNorms {
    double l2 = 0.0;
    double h1_semi = 0.0;
    double linf = 0.0;
    double w1inf = 0.0;

    /// Full H¹ norm (L² plus seminorm, in quadrature).
    [[nodiscard]] double h1() const { return std::sqrt(l2 * l2 + h1_semi * h1_semi); }
};

/// ‖field‖²_{L²}, integrated with the degree-5 rule (exact for P1).
template <int Dim>
double l2_norm_squared(const FEField<Dim>& field)
{
    const auto& mesh = field.mesh();
    const auto& rule = degree5_rule<Dim>();
    double sum = 0.0;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const double scale = mesh.volume(k) / reference_volume<Dim>();
        double local = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const ElementLocation<Dim> loc{k, rule.points[q]};
            double s = 0.0;
            for (int c = 0; c < field.components(); ++c) {
                const double u = field.eval(loc, c);
                s += u * u;
            }
            local += rule.weights[q] * s;
        }
        sum += scale * local;
    }
    return sum;
}

template <int Dim>
double h1_seminorm_squared(const FEField<Dim>& field)
{
    const auto& mesh = field.mesh();
    double sum = 0.0;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto g = field.element_gradient(k);
        double s = 0.0;
        for (int c = 0; c < field.components(); ++c)
            for (int j = 0; j < Dim; ++j) s += g[c][j] * g[c][j];
        sum += mesh.volume(k) * s;
    }
    return sum;
}

/// Mesh-weighted pressure seminorm |p|_h = (Σ_K h_K² ‖∇p‖²_K)^{1/2}.
template <int Dim>
double mesh_weighted_seminorm(const FEField<Dim>& field)
{
    const auto& mesh = field.mesh();
    double sum = 0.0;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto g = field.element_gradient(k);
        double s = 0.0;
        for (int c = 0; c < field.components(); ++c)
            for (int j = 0; j < Dim; ++j) s += g[c][j] * g[c][j];
        const double hk = mesh.diameter(k);
        sum += hk * hk * mesh.volume(k) * s;
    }
    return std::sqrt(sum);
}

template <int Dim>
double linf_norm(const FEField<Dim>& field)
{
    double m = 0.0;
    for (double v : field.values()) m = std::max(m, std::abs(v));
    return m;
}

/// ‖field‖_{1,∞}: nodal max plus the largest elementwise max-row-sum of ∇field.
template <int Dim>
double w1inf_norm(const FEField<Dim>& field)
{
    const auto& mesh = field.mesh();
    double gmax = 0.0;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto g = field.element_gradient(k);
        for (int c = 0; c < field.components(); ++c) {
            double row = 0.0;
            for (int j = 0; j < Dim; ++j) row += std::abs(g[c][j]);
            gmax = std::max(gmax, row);
        }
    }
    return linf_norm(field) + gmax;
}

template <int Dim>
DiscreteNorms discrete_norms(const FEField<Dim>& field)
{
    DiscreteNorms n;
    n.l2 = std::sqrt(l2_norm_squared(field));
    n.h1_semi = std::sqrt(h1_seminorm_squared(field));
    n.linf = linf_norm(field);
    n.w1inf = w1inf_norm(field);
    return n;
}

}  // namespace lgns
