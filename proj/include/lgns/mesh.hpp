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
 * @file mesh.hpp
 * @brief Structured simplicial triangulations of the unit square / cube.
 *
 * Every grid cell of an N^d grid is split with one fixed pattern: two
 * triangles along the bottom-left to top-right diagonal for d = 2, and the
 * six Kuhn tetrahedra (one per ordering of the local coordinates) for
 * d = 3. Because the pattern is uniform, point location is O(1): find the
 * grid cell, then test its 2 or 6 simplices.
 */
#pragma once

#include "lgns/common.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgns {

template <int Dim>
struct ElementLocation {
    std::size_t element = 0;
    std::array<double, Dim + 1> barycentric{};
};

template <int Dim>
class SimplexMesh {
public:
    static constexpr int kVertsPerSimplex = Dim + 1;
    static constexpr int kSimplicesPerCell = Dim == 2 ? 2 : 6;
    /// Tolerance for accepting points that sit on the closed domain boundary.
    static constexpr double kDomainTolerance = 1e-12;

    using PointType = Point<Dim>;
    using Simplex = std::array<std::uint32_t, Dim + 1>;
    /// Gradients of the d+1 barycentric (hat) functions on one simplex.
    using ShapeGradients = std::array<PointType, Dim + 1>;

    SimplexMesh(int divisions, std::vector<PointType> vertices, std::vector<Simplex> simplices);

    [[nodiscard]] static constexpr int dimension() { return Dim; }
    [[nodiscard]] int divisions() const { return n_; }
    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
    [[nodiscard]] std::size_t num_simplices() const { return simplices_.size(); }

    [[nodiscard]] std::span<const PointType> vertices() const { return vertices_; }
    [[nodiscard]] const PointType& vertex(std::size_t v) const { return vertices_[v]; }
    [[nodiscard]] std::span<const Simplex> simplices() const { return simplices_; }
    [[nodiscard]] const Simplex& simplex(std::size_t k) const { return simplices_[k]; }

    [[nodiscard]] bool on_boundary(std::size_t v) const { return boundary_[v] != 0; }
    [[nodiscard]] double volume(std::size_t k) const { return volume_[k]; }
    [[nodiscard]] double signed_volume(std::size_t k) const;
    /// Element diameter h_K (longest edge).
    [[nodiscard]] double diameter(std::size_t k) const { return diameter_[k]; }
    /// Global mesh size h = max_K h_K.
    [[nodiscard]] double mesh_size() const { return mesh_size_; }
    [[nodiscard]] const ShapeGradients& shape_gradients(std::size_t k) const { return gradients_[k]; }

    [[nodiscard]] std::array<double, Dim + 1> barycentric(std::size_t k, const PointType& x) const;
    [[nodiscard]] PointType to_physical(std::size_t k, const std::array<double, Dim + 1>& bary) const;

    /// Simplex containing x and the barycentric coordinates of x in it.
    /// Points on shared faces resolve to the lowest simplex index of the
    /// grid cell chosen by the lookup.
    [[nodiscard]] ElementLocation<Dim> locate(const PointType& x) const;

private:
    int n_;
    std::vector<PointType> vertices_;
    std::vector<Simplex> simplices_;
    std::vector<std::uint8_t> boundary_;
    std::vector<double> volume_;
    std::vector<double> diameter_;
    std::vector<ShapeGradients> gradients_;
    double mesh_size_ = 0.0;
};

namespace detail {

template <int Dim>
double determinant(const std::array<Point<Dim>, Dim>& cols)
{
    if constexpr (Dim == 2) {
        return cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1];
    } else {
        const auto& a = cols[0];
        const auto& b = cols[1];
        const auto& c = cols[2];
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
               c[0] * (a[1] * b[2] - a[2] * b[1]);
    }
}

/// Rows of J^{-1} where J has the given columns.
template <int Dim>
std::array<Point<Dim>, Dim> inverse_rows(const std::array<Point<Dim>, Dim>& cols, double det)
{
    std::array<Point<Dim>, Dim> inv{};
    if constexpr (Dim == 2) {
        // J = [[c0x, c1x], [c0y, c1y]]
        inv[0] = {cols[1][1] / det, -cols[1][0] / det};
        inv[1] = {-cols[0][1] / det, cols[0][0] / det};
    } else {
        // Rows of the inverse are cross products of the columns.
        const auto cross = [](const Point<3>& u, const Point<3>& v) {
            return Point<3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        };
        const auto r0 = cross(cols[1], cols[2]);
        const auto r1 = cross(cols[2], cols[0]);
        const auto r2 = cross(cols[0], cols[1]);
        for (int j = 0; j < 3; ++j) {
            inv[0][j] = r0[j] / det;
            inv[1][j] = r1[j] / det;
            inv[2][j] = r2[j] / det;
        }
    }
    return inv;
}

template <int Dim>
std::array<Point<Dim>, Dim> edge_columns(const std::array<Point<Dim>, Dim + 1>& v)
{
    std::array<Point<Dim>, Dim> cols{};
    for (int k = 0; k < Dim; ++k)
        for (int i = 0; i < Dim; ++i) cols[k][i] = v[k + 1][i] - v[0][i];
    return cols;
}

}  // namespace detail

template <int Dim>
SimplexMesh<Dim>::SimplexMesh(int divisions, std::vector<PointType> vertices, std::vector<Simplex> simplices)
    : n_(divisions), vertices_(std::move(vertices)), simplices_(std::move(simplices))
{
    check_dim<Dim>();
    boundary_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        bool b = false;
        for (double c : vertices_[v]) b = b || c == 0.0 || c == 1.0;
        boundary_[v] = b ? 1 : 0;
    }

    const std::size_t ns = simplices_.size();
    volume_.resize(ns);
    diameter_.resize(ns);
    gradients_.resize(ns);
    for (std::size_t k = 0; k < ns; ++k) {
        std::array<PointType, Dim + 1> v{};
        for (int a = 0; a <= Dim; ++a) v[a] = vertices_[simplices_[k][a]];
        const auto cols = detail::edge_columns<Dim>(v);
        const double det = detail::determinant<Dim>(cols);
        if (!(det > 0.0)) {
            throw std::invalid_argument("simplex " + std::to_string(k) + " is not positively oriented");
        }
        volume_[k] = det * reference_volume<Dim>();

        const auto inv = detail::inverse_rows<Dim>(cols, det);
        PointType g0{};
        for (int a = 0; a < Dim; ++a) {
            gradients_[k][a + 1] = inv[a];
            for (int i = 0; i < Dim; ++i) g0[i] -= inv[a][i];
        }
        gradients_[k][0] = g0;

        double diam2 = 0.0;
        for (int a = 0; a <= Dim; ++a) {
            for (int b = a + 1; b <= Dim; ++b) {
                double l2 = 0.0;
                for (int i = 0; i < Dim; ++i) l2 += (v[a][i] - v[b][i]) * (v[a][i] - v[b][i]);
                diam2 = std::max(diam2, l2);
            }
        }
        diameter_[k] = std::sqrt(diam2);
        mesh_size_ = std::max(mesh_size_, diameter_[k]);
    }
}

template <int Dim>
double SimplexMesh<Dim>::signed_volume(std::size_t k) const
{
    std::array<PointType, Dim + 1> v{};
    for (int a = 0; a <= Dim; ++a) v[a] = vertices_[simplices_[k][a]];
    return detail::determinant<Dim>(detail::edge_columns<Dim>(v)) * reference_volume<Dim>();
}

template <int Dim>
std::array<double, Dim + 1> SimplexMesh<Dim>::barycentric(std::size_t k, const PointType& x) const
{
    const PointType& v0 = vertices_[simplices_[k][0]];
    const auto& g = gradients_[k];
    std::array<double, Dim + 1> lambda{};
    double rest = 1.0;
    for (int a = 1; a <= Dim; ++a) {
        double s = 0.0;
        for (int i = 0; i < Dim; ++i) s += g[a][i] * (x[i] - v0[i]);
        lambda[a] = s;
        rest -= s;
    }
    lambda[0] = rest;
    return lambda;
}

template <int Dim>
typename SimplexMesh<Dim>::PointType SimplexMesh<Dim>::to_physical(std::size_t k,
                                                                  const std::array<double, Dim + 1>& bary) const
{
    PointType x{};
    for (int a = 0; a <= Dim; ++a) {
        const PointType& v = vertices_[simplices_[k][a]];
        for (int i = 0; i < Dim; ++i) x[i] += bary[a] * v[i];
    }
    return x;
}

template <int Dim>
ElementLocation<Dim> SimplexMesh<Dim>::locate(const PointType& x) const
{
    PointType y = x;
    std::size_t cell = 0;
    std::size_t stride = 1;
    for (int i = 0; i < Dim; ++i) {
        if (!(x[i] >= -kDomainTolerance && x[i] <= 1.0 + kDomainTolerance)) {
            throw std::out_of_range("locate: point outside the closed unit domain");
        }
        y[i] = std::clamp(x[i], 0.0, 1.0);
        // ceil(.) - 1 sends grid lines to the lower cell, which owns the lower simplex indices.
        const int c = std::clamp(static_cast<int>(std::ceil(y[i] * n_)) - 1, 0, n_ - 1);
        cell += stride * static_cast<std::size_t>(c);
        stride *= static_cast<std::size_t>(n_);
    }

    ElementLocation<Dim> best{};
    double best_min = -std::numeric_limits<double>::infinity();
    const std::size_t first = cell * kSimplicesPerCell;
    for (std::size_t k = first; k < first + kSimplicesPerCell; ++k) {
        const auto lambda = barycentric(k, y);
        const double lo = *std::min_element(lambda.begin(), lambda.end());
        if (lo >= -1e-14) return {k, lambda};
        if (lo > best_min) {
            best_min = lo;
            best = {k, lambda};
        }
    }
    return best;
}

/// Structured mesh of (0,1)^Dim with N divisions per side.
template <int Dim>
SimplexMesh<Dim> build_unit_mesh(int n)
{
    check_dim<Dim>();
    if (n < 2) throw std::invalid_argument("build_unit_mesh: N must be >= 2");

    using Mesh = SimplexMesh<Dim>;
    const std::size_t np = static_cast<std::size_t>(n) + 1;
    std::size_t nv = 1;
    for (int i = 0; i < Dim; ++i) nv *= np;

    std::vector<typename Mesh::PointType> vertices(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t r = v;
        for (int i = 0; i < Dim; ++i) {
            vertices[v][i] = static_cast<double>(r % np) / static_cast<double>(n);
            r /= np;
        }
    }

    const auto vid = [np](std::array<std::size_t, Dim> ijk) {
        std::size_t id = 0;
        for (int i = Dim - 1; i >= 0; --i) id = id * np + ijk[i];
        return static_cast<std::uint32_t>(id);
    };

    std::size_t ncells = 1;
    for (int i = 0; i < Dim; ++i) ncells *= static_cast<std::size_t>(n);
    std::vector<typename Mesh::Simplex> simplices;
    simplices.reserve(ncells * Mesh::kSimplicesPerCell);

    for (std::size_t c = 0; c < ncells; ++c) {
        std::array<std::size_t, Dim> base{};
        std::size_t r = c;
        for (int i = 0; i < Dim; ++i) {
            base[i] = r % static_cast<std::size_t>(n);
            r /= static_cast<std::size_t>(n);
        }
        if constexpr (Dim == 2) {
            const auto v00 = vid(base);
            const auto v10 = vid({base[0] + 1, base[1]});
            const auto v11 = vid({base[0] + 1, base[1] + 1});
            const auto v01 = vid({base[0], base[1] + 1});
            simplices.push_back({v00, v10, v11});
            simplices.push_back({v00, v11, v01});
        } else {
            // Kuhn subdivision: walk from the lower corner to the upper corner
            // along the axes in each of the 3! orders.
            static constexpr std::array<std::array<int, 3>, 6> orders{
                {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
            for (const auto& order : orders) {
                std::array<std::size_t, 3> p = base;
                typename Mesh::Simplex s{};
                s[0] = vid(p);
                for (int step = 0; step < 3; ++step) {
                    ++p[order[step]];
                    s[step + 1] = vid(p);
                }
                // Odd permutations produce negatively oriented tetrahedra.
                const int inversions = (order[0] > order[1]) + (order[0] > order[2]) + (order[1] > order[2]);
                if (inversions % 2 == 1) std::swap(s[2], s[3]);
                simplices.push_back(s);
            }
        }
    }
    return Mesh(n, std::move(vertices), std::move(simplices));
}

/// Legacy VTK ASCII unstructured grid (points + cells), for inspection.
template <int Dim>
void write_vtk(const SimplexMesh<Dim>& mesh, std::ostream& os)
{
    os << "# vtk DataFile Version 3.0\nlgns mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.num_vertices() << " double\n";
    os.precision(17);
    for (const auto& p : mesh.vertices()) {
        os << p[0] << ' ' << p[1] << ' ' << (Dim == 3 ? p[Dim - 1] : 0.0) << '\n';
    }
    const std::size_t ns = mesh.num_simplices();
    os << "CELLS " << ns << ' ' << ns * (Dim + 2) << '\n';
    for (const auto& s : mesh.simplices()) {
        os << Dim + 1;
        for (auto v : s) os << ' ' << v;
        os << '\n';
    }
    os << "CELL_TYPES " << ns << '\n';
    for (std::size_t k = 0; k < ns; ++k) os << (Dim == 2 ? 5 : 10) << '\n';
}

}  // namespace lgns
