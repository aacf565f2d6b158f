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
 * @file assembly.hpp
 * @brief P1/P1 bilinear forms and the stabilized saddle-point system.
 *
 * Global velocity matrices use the component-major numbering of FEField
 * (index c * num_vertices + v). The saddle system eliminates the Dirichlet
 * velocity rows and appends one Lagrange multiplier enforcing (p, 1) = 0:
 *
 *     [ A   Bᵀ  0 ] [u]   [g]
 *     [ B  -C   m ] [p] = [0]
 *     [ 0   mᵀ  0 ] [λ]   [0]
 *
 * with A = M/Δt + viscous, B from b(v,q) = −(∇·v, q), C the
 * Brezzi-Pitkäranta term δ₀ Σ_K h_K² (∇p, ∇q)_K and m_i = ∫ψ_i.
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/fem.hpp"
#include "lgns/mesh.hpp"
#include "lgns/quadrature.hpp"
#include "lgns/sparse.hpp"
#include "lgns/transport.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lgns {

/// Velocity unknowns live on interior vertices only.
template <int Dim>
class DofMap {
public:
    explicit DofMap(const SimplexMesh<Dim>& mesh) : nv_(mesh.num_vertices()), interior_index_(nv_, -1)
    {
        for (std::size_t v = 0; v < nv_; ++v) {
            if (!mesh.on_boundary(v)) interior_index_[v] = static_cast<std::int64_t>(n_interior_++);
        }
        velocity_map_.assign(Dim * nv_, -1);
        for (int c = 0; c < Dim; ++c)
            for (std::size_t v = 0; v < nv_; ++v)
                if (interior_index_[v] >= 0)
                    velocity_map_[c * nv_ + v] = static_cast<std::int64_t>(c * n_interior_) + interior_index_[v];
        pressure_map_.resize(nv_);
        for (std::size_t v = 0; v < nv_; ++v) pressure_map_[v] = static_cast<std::int64_t>(v);
    }

    [[nodiscard]] std::size_t num_vertices() const { return nv_; }
    [[nodiscard]] std::size_t num_interior() const { return n_interior_; }
    [[nodiscard]] std::size_t num_velocity() const { return Dim * n_interior_; }
    [[nodiscard]] std::size_t num_pressure() const { return nv_; }
    [[nodiscard]] std::size_t pressure_offset() const { return num_velocity(); }
    [[nodiscard]] std::size_t multiplier_index() const { return num_velocity() + nv_; }
    [[nodiscard]] std::size_t size() const { return num_velocity() + nv_ + 1; }

    /// Full component-major velocity index -> system index, or -1 on the boundary.
    [[nodiscard]] std::span<const std::int64_t> velocity_map() const { return velocity_map_; }
    [[nodiscard]] std::span<const std::int64_t> pressure_map() const { return pressure_map_; }

private:
    std::size_t nv_;
    std::size_t n_interior_ = 0;
    std::vector<std::int64_t> interior_index_;
    std::vector<std::int64_t> velocity_map_;
    std::vector<std::int64_t> pressure_map_;
};

/// Consistent P1 mass matrix, one diagonal block per component.
template <int Dim>
CsrMatrix assemble_mass(const SimplexMesh<Dim>& mesh, int components = 1)
{
    const std::size_t nv = mesh.num_vertices();
    TripletList t;
    t.reserve(mesh.num_simplices() * (Dim + 1) * (Dim + 1) * static_cast<std::size_t>(components));
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const double base = mesh.volume(k) / ((Dim + 1) * (Dim + 2));
        for (int c = 0; c < components; ++c)
            for (int a = 0; a <= Dim; ++a)
                for (int b = 0; b <= Dim; ++b)
                    t.add(c * nv + s[a], c * nv + s[b], a == b ? 2.0 * base : base);
    }
    return t.compress(components * nv, components * nv);
}

/// Matrix of a(u,v) = 2ν (D(u), D(v)) on the full vector P1 space.
template <int Dim>
CsrMatrix assemble_viscous(const SimplexMesh<Dim>& mesh, double nu)
{
    if (!(nu > 0.0)) throw std::invalid_argument("assemble_viscous: viscosity must be positive");
    const std::size_t nv = mesh.num_vertices();
    TripletList t;
    t.reserve(mesh.num_simplices() * (Dim + 1) * (Dim + 1) * Dim * Dim);
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const auto& g = mesh.shape_gradients(k);
        const double scale = nu * mesh.volume(k);
        for (int a = 0; a <= Dim; ++a) {
            for (int b = 0; b <= Dim; ++b) {
                double gg = 0.0;
                for (int l = 0; l < Dim; ++l) gg += g[a][l] * g[b][l];
                // 2 D(φ_a e_i) : D(φ_b e_j) = δ_ij ∇φ_a·∇φ_b + ∂_j φ_a ∂_i φ_b
                for (int i = 0; i < Dim; ++i)
                    for (int j = 0; j < Dim; ++j)
                        t.add(i * nv + s[a], j * nv + s[b], scale * ((i == j ? gg : 0.0) + g[a][j] * g[b][i]));
            }
        }
    }
    return t.compress(Dim * nv, Dim * nv);
}

/// B_{q,(c,v)} = −∫ ∂_c φ_v ψ_q; rows are pressure vertices.
template <int Dim>
CsrMatrix assemble_divergence(const SimplexMesh<Dim>& mesh)
{
    const std::size_t nv = mesh.num_vertices();
    TripletList t;
    t.reserve(mesh.num_simplices() * (Dim + 1) * (Dim + 1) * Dim);
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const auto& g = mesh.shape_gradients(k);
        const double mean = mesh.volume(k) / (Dim + 1);  // ∫_K ψ_q
        for (int q = 0; q <= Dim; ++q)
            for (int b = 0; b <= Dim; ++b)
                for (int c = 0; c < Dim; ++c) t.add(s[q], c * nv + s[b], -mean * g[b][c]);
    }
    return t.compress(nv, Dim * nv);
}

/// Brezzi-Pitkäranta pressure stabilization δ₀ Σ_K h_K² (∇p, ∇q)_K.
template <int Dim>
CsrMatrix assemble_stabilization(const SimplexMesh<Dim>& mesh, double delta0)
{
    if (!(delta0 > 0.0)) throw std::invalid_argument("assemble_stabilization: delta0 must be positive");
    const std::size_t nv = mesh.num_vertices();
    TripletList t;
    t.reserve(mesh.num_simplices() * (Dim + 1) * (Dim + 1));
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const auto& g = mesh.shape_gradients(k);
        const double hk = mesh.diameter(k);
        const double scale = delta0 * hk * hk * mesh.volume(k);
        for (int a = 0; a <= Dim; ++a)
            for (int b = 0; b <= Dim; ++b) {
                double gg = 0.0;
                for (int l = 0; l < Dim; ++l) gg += g[a][l] * g[b][l];
                t.add(s[a], s[b], scale * gg);
            }
    }
    return t.compress(nv, nv);
}

/// m_i = ∫ ψ_i, the pressure mass matrix applied to the constant 1.
template <int Dim>
std::vector<double> pressure_mass_vector(const SimplexMesh<Dim>& mesh)
{
    std::vector<double> m(mesh.num_vertices(), 0.0);
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const double share = mesh.volume(k) / (Dim + 1);
        for (auto v : mesh.simplex(k)) m[v] += share;
    }
    return m;
}

template <int Dim>
struct SaddleSystem {
    DofMap<Dim> dofs;
    CsrMatrix a;  ///< interior velocity block
    CsrMatrix b;  ///< pressure rows, interior velocity columns
    CsrMatrix c;  ///< stabilization
    std::vector<double> m;
    CsrMatrix op;  ///< the assembled symmetric block operator

    [[nodiscard]] std::size_t rows() const { return op.rows(); }
    void multiply(std::span<const double> x, std::span<double> y) const { op.multiply(x, y); }
    [[nodiscard]] std::vector<double> diagonal() const { return op.diagonal(); }

    /// Unpack a system vector into (velocity, pressure) fields; boundary velocity is zero.
    [[nodiscard]] std::pair<FEField<Dim>, FEField<Dim>> unpack(const SimplexMesh<Dim>& mesh,
                                                              std::span<const double> x) const
    {
        FEField<Dim> u(mesh, Dim);
        FEField<Dim> p(mesh, 1);
        const auto vmap = dofs.velocity_map();
        auto uv = u.values();
        for (std::size_t i = 0; i < vmap.size(); ++i) uv[i] = vmap[i] >= 0 ? x[static_cast<std::size_t>(vmap[i])] : 0.0;
        auto pv = p.values();
        for (std::size_t v = 0; v < dofs.num_pressure(); ++v) pv[v] = x[dofs.pressure_offset() + v];
        return {std::move(u), std::move(p)};
    }

    /// Inverse of unpack (multiplier set to zero).
    [[nodiscard]] std::vector<double> pack(const FEField<Dim>& u, const FEField<Dim>& p) const
    {
        std::vector<double> x(dofs.size(), 0.0);
        const auto vmap = dofs.velocity_map();
        const auto uv = u.values();
        for (std::size_t i = 0; i < vmap.size(); ++i)
            if (vmap[i] >= 0) x[static_cast<std::size_t>(vmap[i])] = uv[i];
        const auto pv = p.values();
        for (std::size_t v = 0; v < dofs.num_pressure(); ++v) x[dofs.pressure_offset() + v] = pv[v];
        return x;
    }

    /// Keep only interior rows of a full component-major velocity vector.
    [[nodiscard]] std::vector<double> restrict_velocity(std::span<const double> full) const
    {
        std::vector<double> r(dofs.num_velocity(), 0.0);
        const auto vmap = dofs.velocity_map();
        for (std::size_t i = 0; i < vmap.size(); ++i)
            if (vmap[i] >= 0) r[static_cast<std::size_t>(vmap[i])] = full[i];
        return r;
    }
};

/// Saddle system with velocity block mass_coeff·M + viscous. mass_coeff = 1/Δt
/// gives the time-stepping matrix, mass_coeff = 0 the Stokes projection.
template <int Dim>
SaddleSystem<Dim> assemble_saddle(const SimplexMesh<Dim>& mesh, double nu, double mass_coeff, double delta0)
{
    DofMap<Dim> dofs(mesh);
    const std::size_t nvel = dofs.num_velocity();
    const std::size_t np = dofs.num_pressure();

    CsrMatrix full_a = assemble_viscous(mesh, nu);
    if (mass_coeff != 0.0) {
        TripletList t;
        t.add_block(full_a, 0, 0);
        t.add_block(assemble_mass(mesh, Dim), 0, 0, false, mass_coeff);
        full_a = t.compress(full_a.rows(), full_a.cols());
    }
    CsrMatrix a = extract(full_a, dofs.velocity_map(), nvel, dofs.velocity_map(), nvel);
    CsrMatrix b = extract(assemble_divergence(mesh), dofs.pressure_map(), np, dofs.velocity_map(), nvel);
    CsrMatrix c = assemble_stabilization(mesh, delta0);
    std::vector<double> m = pressure_mass_vector(mesh);

    TripletList t;
    t.reserve(a.nnz() + 2 * b.nnz() + c.nnz() + 2 * np);
    const std::size_t po = dofs.pressure_offset();
    const std::size_t mi = dofs.multiplier_index();
    t.add_block(a, 0, 0);
    t.add_block(b, 0, po, true);
    t.add_block(b, po, 0);
    t.add_block(c, po, po, false, -1.0);
    for (std::size_t v = 0; v < np; ++v) {
        t.add(po + v, mi, m[v]);
        t.add(mi, po + v, m[v]);
    }
    CsrMatrix op = t.compress(dofs.size(), dofs.size());
    return {std::move(dofs), std::move(a), std::move(b), std::move(c), std::move(m), std::move(op)};
}

/// Time-stepping matrix of the scheme, with A = M/Δt + viscous.
template <int Dim>
SaddleSystem<Dim> assemble_system(const SimplexMesh<Dim>& mesh, double nu, double dt, double delta0)
{
    if (!(dt > 0.0)) throw std::invalid_argument("assemble_system: dt must be positive");
    return assemble_saddle(mesh, nu, 1.0 / dt, delta0);
}

/// Full (pre-elimination) velocity load
///   (1/Δt) ∫ (u∘X₁) · φ + ∫ f(·, t) · φ
/// from composed values laid out as UpwindEvaluator::composed_values.
template <int Dim, class Forcing>
std::vector<double> assemble_velocity_load(const SimplexMesh<Dim>& mesh, std::span<const double> composed, double dt,
                                           Forcing&& f, double t)
{
    const auto& rule = degree5_rule<Dim>();
    const std::size_t nq = rule.size();
    const std::size_t nv = mesh.num_vertices();
    std::vector<double> load(Dim * nv, 0.0);
    const double inv_dt = 1.0 / dt;
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const double scale = mesh.volume(k) / reference_volume<Dim>();
        for (std::size_t q = 0; q < nq; ++q) {
            const auto x = mesh.to_physical(k, rule.points[q]);
            const Point<Dim> fx = f(x, t);
            const double* uc = composed.data() + (k * nq + q) * Dim;
            const double wq = scale * rule.weights[q];
            for (int c = 0; c < Dim; ++c) {
                const double val = wq * (inv_dt * uc[c] + fx[c]);
                for (int a = 0; a <= Dim; ++a) load[c * nv + s[a]] += val * rule.points[q][a];
            }
        }
    }
    return load;
}

/// Right-hand side of one time step: characteristic term through `transport`
/// (which carries w and Δt), forcing at t_n, zero pressure and multiplier rows.
template <int Dim, class Forcing>
std::vector<double> assemble_rhs(const SaddleSystem<Dim>& system, const FEField<Dim>& u_prev,
                                 UpwindEvaluator<Dim>& transport, Forcing&& f, double t_n)
{
    const auto& mesh = u_prev.mesh();
    const auto composed = transport.composed_values(u_prev);
    const auto load = assemble_velocity_load(mesh, composed, transport.dt(), f, t_n);
    std::vector<double> rhs(system.dofs.size(), 0.0);
    const auto vel = system.restrict_velocity(load);
    std::copy(vel.begin(), vel.end(), rhs.begin());
    return rhs;
}

}  // namespace lgns
