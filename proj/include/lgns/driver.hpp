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
 * @file driver.hpp
 * @brief Run configuration, stabilized Stokes projection and the
 *        Lagrange-Galerkin time loop.
 *
 * Each step solves
 *   ((u^n − u^{n−1}∘X₁(u^{n−1},Δt))/Δt, v) + a(u^n,v) + b(v,p^n) + b(u^n,q)
 *       − C_h(p^n,q) = (f^n, v)
 * with the matrix assembled once per run; only the right-hand side changes.
 */
#pragma once

#include "lgns/assembly.hpp"
#include "lgns/common.hpp"
#include "lgns/fem.hpp"
#include "lgns/linsolve.hpp"
#include "lgns/mesh.hpp"
#include "lgns/problems.hpp"
#include "lgns/quadrature.hpp"
#include "lgns/transport.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lgns {

enum class DtLaw { linear, quadratic };

inline std::string to_string(DtLaw law) { return law == DtLaw::linear ? "linear" : "quadratic"; }

inline DtLaw parse_dt_law(const std::string& s)
{
    if (s == "linear") return DtLaw::linear;
    if (s == "quadratic") return DtLaw::quadratic;
    throw std::invalid_argument("unknown dt law '" + s + "' (expected linear or quadratic)");
}

struct RunConfig {
    int dim = 2;
    int n = 16;
    double nu = 0.1;
    double t_end = 1.0;
    DtLaw law = DtLaw::linear;
    /// γ₁ for the linear law (Δt = γ₁h), γ₂ for the quadratic law (Δt = γ₂h²).
    double gamma = 4.0;
    double delta0 = 1.0;
    SolverConfig solver{};
    std::string problem = "mms2d";
    double cfl_warn = 0.5;
    double cfl_abort = 1.0;
    /// Include n = 0 in the l∞(L²) maximum.
    bool linf_includes_initial = true;
    std::string out_path;
    std::string fields_path;
    std::string mesh_path;

    /// Grid spacing 1/N used by the Δt law.
    [[nodiscard]] double h() const { return 1.0 / n; }

    [[nodiscard]] double dt() const
    {
        const double hh = h();
        return law == DtLaw::linear ? gamma * hh : gamma * hh * hh;
    }

    /// N_T = ⌊T/Δt⌋ (a relative slack absorbs T/Δt landing a rounding error below an integer).
    [[nodiscard]] int num_steps() const
    {
        const double ratio = t_end / dt();
        return static_cast<int>(std::floor(ratio * (1.0 + 1e-12)));
    }

    void validate() const
    {
        validate_dimension(dim);
        if (n < 2) throw std::invalid_argument("N must be >= 2");
        if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
        if (!(t_end > 0.0)) throw std::invalid_argument("final time must be positive");
        if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
        if (!(delta0 > 0.0)) throw std::invalid_argument("delta0 must be positive");
        if (!(cfl_warn > 0.0 && cfl_warn <= cfl_abort)) throw std::invalid_argument("need 0 < cfl_warn <= cfl_abort");
        solver.validate();
        if (problem_dimension(problem) != dim) {
            throw std::invalid_argument("problem " + problem + " does not match dimension " + std::to_string(dim));
        }
        if (num_steps() < 1) {
            std::ostringstream msg;
            msg << "final time " << t_end << " is shorter than one time step (dt = " << dt() << ")";
            throw std::invalid_argument(msg.str());
        }
    }
};

template <int Dim>
struct TimeState {
    int n = 0;
    double t = 0.0;
    FEField<Dim> u;
    FEField<Dim> p;
};

struct StepRecord {
    int n = 0;
    double t = 0.0;
    double cfl_product = 0.0;
    bool cfl_warning = false;
    std::size_t iterations = 0;
    double residual = 0.0;
    std::size_t clamped_feet = 0;
    std::size_t feet = 0;
};

template <int Dim>
struct StokesProjection {
    FEField<Dim> u;
    FEField<Dim> p;
    SolveOutcome outcome;
};

/// Stabilized Stokes projection (ŵ_h, r̂_h) of (w, r):
///   A_h((ŵ_h, r̂_h), (v, q)) = a(w, v) + b(v, r) + b(w, q)  for all (v, q).
/// `w_grad(x)` returns ∇w with rows ∇w_i; `r(x)` returns the pressure.
template <int Dim, class WGrad, class R>
StokesProjection<Dim> stokes_projection(const SimplexMesh<Dim>& mesh, double nu, double delta0, WGrad&& w_grad,
                                        R&& r, const SolverConfig& solver = {})
{
    const SaddleSystem<Dim> sys = assemble_saddle(mesh, nu, 0.0, delta0);
    const std::size_t nv = mesh.num_vertices();
    const auto& rule = degree5_rule<Dim>();

    std::vector<double> vel(Dim * nv, 0.0);
    std::vector<double> rhs(sys.dofs.size(), 0.0);
    const std::size_t po = sys.dofs.pressure_offset();
    for (std::size_t k = 0; k < mesh.num_simplices(); ++k) {
        const auto& s = mesh.simplex(k);
        const auto& g = mesh.shape_gradients(k);
        const double scale = mesh.volume(k) / reference_volume<Dim>();
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto x = mesh.to_physical(k, rule.points[q]);
            const auto gw = w_grad(x);
            const double rx = r(x);
            const double wq = scale * rule.weights[q];
            double div = 0.0;
            for (int i = 0; i < Dim; ++i) div += gw[i][i];
            for (int a = 0; a <= Dim; ++a) {
                for (int c = 0; c < Dim; ++c) {
                    // a(w, φ_a e_c) = ν Σ_l (∂_l w_c + ∂_c w_l) ∂_l φ_a ; b(φ_a e_c, r) = −∂_c φ_a r
                    double sym = 0.0;
                    for (int l = 0; l < Dim; ++l) sym += (gw[c][l] + gw[l][c]) * g[a][l];
                    vel[c * nv + s[a]] += wq * (nu * sym - g[a][c] * rx);
                }
                rhs[po + s[a]] -= wq * div * rule.points[q][a];
            }
        }
    }
    const auto vr = sys.restrict_velocity(vel);
    std::copy(vr.begin(), vr.end(), rhs.begin());

    SolveOutcome out = minres(sys, rhs, solver);
    if (!out.converged) {
        std::ostringstream msg;
        msg << "Stokes projection: MINRES stopped at relative residual " << out.relative_residual << " after "
            << out.iterations << " iterations";
        throw SolverFailure(msg.str());
    }
    auto [u, p] = sys.unpack(mesh, out.x);
    return {std::move(u), std::move(p), std::move(out)};
}

/// Advance one step of the scheme from `prev` with body force `forcing(x, t)`.
/// Throws CflViolation when Δt‖u^{n−1}‖_{1,∞} ≥ cfg.cfl_abort and
/// SolverFailure if MINRES stalls.
template <int Dim, class Forcing>
std::pair<TimeState<Dim>, StepRecord> step(const TimeState<Dim>& prev, const SaddleSystem<Dim>& system,
                                           Forcing&& forcing, const RunConfig& cfg)
{
    const double dt = cfg.dt();
    StepRecord rec;
    rec.n = prev.n + 1;
    rec.t = rec.n * dt;

    const CflCheck cfl = check_cfl(prev.u, dt);
    rec.cfl_product = cfl.product;
    if (cfl.product >= cfg.cfl_abort) {
        std::ostringstream msg;
        msg << "step " << rec.n << ": dt*|u_h|_{1,inf} = " << cfl.product << " >= " << cfg.cfl_abort;
        throw CflViolation(msg.str());
    }
    rec.cfl_warning = cfl.product >= cfg.cfl_warn;

    UpwindEvaluator<Dim> transport(prev.u, dt);
    const auto rhs = assemble_rhs(system, prev.u, transport, forcing, rec.t);
    rec.clamped_feet = transport.clamp_count();
    rec.feet = transport.foot_count();

    const auto guess = system.pack(prev.u, prev.p);
    SolveOutcome out = minres(system, rhs, cfg.solver, guess);
    rec.iterations = out.iterations;
    rec.residual = out.relative_residual;
    if (!out.converged) {
        std::ostringstream msg;
        msg << "step " << rec.n << ": MINRES stopped at relative residual " << out.relative_residual << " after "
            << out.iterations << " iterations";
        throw SolverFailure(msg.str());
    }
    auto [u, p] = system.unpack(prev.u.mesh(), out.x);
    return {TimeState<Dim>{rec.n, rec.t, std::move(u), std::move(p)}, rec};
}

/// Owns the mesh, the constant matrix and the problem for one run.
template <int Dim>
class Simulation {
public:
    using Observer = std::function<void(const TimeState<Dim>&, const StepRecord&)>;

    explicit Simulation(RunConfig cfg)
        : cfg_((cfg.validate(), std::move(cfg))), mesh_(std::make_unique<SimplexMesh<Dim>>(build_unit_mesh<Dim>(cfg_.n))),
          problem_(cfg_.nu)
    {
        if (cfg_.dim != Dim) throw std::invalid_argument("Simulation: config dimension mismatch");
    }

    [[nodiscard]] const RunConfig& config() const { return cfg_; }
    [[nodiscard]] const SimplexMesh<Dim>& mesh() const { return *mesh_; }
    [[nodiscard]] const ManufacturedProblem<Dim>& problem() const { return problem_; }
    [[nodiscard]] std::size_t assembly_count() const { return assemblies_; }
    [[nodiscard]] const SaddleSystem<Dim>& system()
    {
        if (!system_) {
            system_ = std::make_unique<SaddleSystem<Dim>>(assemble_system(*mesh_, cfg_.nu, cfg_.dt(), cfg_.delta0));
            ++assemblies_;
        }
        return *system_;
    }

    /// u_h^0 = first component of the Stokes projection of (u⁰, 0).
    TimeState<Dim> initialize()
    {
        auto proj = stokes_projection<Dim>(
            *mesh_, cfg_.nu, cfg_.delta0,
            [](const Point<Dim>& x) { return ManufacturedProblem<Dim>::velocity_gradient(x, 0.0); },
            [](const Point<Dim>&) { return 0.0; }, cfg_.solver);
        initial_iterations_ = proj.outcome.iterations;
        return TimeState<Dim>{0, 0.0, std::move(proj.u), std::move(proj.p)};
    }

    [[nodiscard]] std::size_t initial_iterations() const { return initial_iterations_; }

    std::pair<TimeState<Dim>, StepRecord> advance(const TimeState<Dim>& prev)
    {
        const auto& problem = problem_;
        return step(prev, system(), [&problem](const Point<Dim>& x, double t) { return problem.forcing(x, t); }, cfg_);
    }

    /// initialize, then N_T steps; the observer sees the initial state
    /// (with a default record) and every new state.
    TimeState<Dim> run(const Observer& observe = {})
    {
        TimeState<Dim> state = initialize();
        if (observe) observe(state, StepRecord{});
        const int steps = cfg_.num_steps();
        for (int n = 1; n <= steps; ++n) {
            auto [next, rec] = advance(state);
            if (observe) observe(next, rec);
            state = std::move(next);
        }
        return state;
    }

private:
    RunConfig cfg_;
    std::unique_ptr<SimplexMesh<Dim>> mesh_;
    ManufacturedProblem<Dim> problem_;
    std::unique_ptr<SaddleSystem<Dim>> system_;
    std::size_t assemblies_ = 0;
    std::size_t initial_iterations_ = 0;
};

}  // namespace lgns
