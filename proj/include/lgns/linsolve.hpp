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
 * @file linsolve.hpp
 * @brief MINRES for symmetric, possibly indefinite, systems.
 *
 * Paige-Saunders three-term Lanczos recurrence with Givens QR of the
 * tridiagonal matrix. An optional Jacobi preconditioner uses |diag(A)|
 * (entries that vanish, such as a Lagrange-multiplier row, map to 1), which
 * keeps the preconditioner symmetric positive definite as MINRES requires.
 */
#pragma once

#include "lgns/common.hpp"
#include "lgns/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lgns {

template <class Op>
concept LinearOperator = requires(const Op& op, std::span<const double> x, std::span<double> y) {
    { op.rows() } -> std::convertible_to<std::size_t>;
    op.multiply(x, y);
};

struct SolverConfig {
    double tolerance = 1e-10;
    /// 0 means 20 × system dimension.
    std::size_t max_iterations = 0;
    bool jacobi = false;
    /// Keep ‖r_k‖ estimates for every iteration in SolveOutcome::history.
    bool record_history = false;

    void validate() const
    {
        if (!(tolerance > 0.0 && tolerance < 1.0)) throw std::invalid_argument("solver tolerance must lie in (0, 1)");
    }
};

struct SolveOutcome {
    std::vector<double> x;
    double relative_residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> history;
};

/// Random-probe symmetry test: |xᵀAy − yᵀAx| relative to ‖x‖‖Ay‖.
template <LinearOperator Op>
bool probe_symmetric(const Op& a, double tol = 1e-10, unsigned seed = 12345)
{
    const std::size_t n = a.rows();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n), y(n), ax(n), ay(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = dist(rng);
        y[i] = dist(rng);
    }
    a.multiply(x, ax);
    a.multiply(y, ay);
    const double lhs = dot(x, ay);
    const double rhs = dot(y, ax);
    const double scale = std::max(norm2(x) * norm2(ay), norm2(y) * norm2(ax));
    return std::abs(lhs - rhs) <= tol * std::max(scale, 1.0);
}

/// Solve A x = b. `x0` is an optional starting guess.
template <LinearOperator Op>
SolveOutcome minres(const Op& a, std::span<const double> b, const SolverConfig& cfg,
                    std::span<const double> x0 = {})
{
    cfg.validate();
    const std::size_t n = a.rows();
    if (b.size() != n) throw std::invalid_argument("minres: right-hand side has the wrong length");
    for (double v : b) {
        if (!std::isfinite(v)) throw SolverFailure("minres: non-finite right-hand side");
    }
    if (!probe_symmetric(a)) throw std::invalid_argument("minres: operator failed the symmetry probe");

    const std::size_t max_it = cfg.max_iterations ? cfg.max_iterations : 20 * n;

    std::vector<double> pinv(n, 1.0);
    if (cfg.jacobi) {
        if constexpr (requires { a.diagonal(); }) {
            const auto d = a.diagonal();
            for (std::size_t i = 0; i < n; ++i) pinv[i] = d[i] != 0.0 ? 1.0 / std::abs(d[i]) : 1.0;
        } else {
            throw std::invalid_argument("minres: Jacobi preconditioning needs an operator with diagonal()");
        }
    }

    SolveOutcome out;
    out.x.assign(n, 0.0);
    if (!x0.empty()) {
        if (x0.size() != n) throw std::invalid_argument("minres: initial guess has the wrong length");
        std::copy(x0.begin(), x0.end(), out.x.begin());
    }

    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        std::fill(out.x.begin(), out.x.end(), 0.0);
        out.converged = true;
        return out;
    }

    std::vector<double> tmp(n);
    const auto true_residual = [&]() {
        a.multiply(out.x, tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = b[i] - tmp[i];
        return norm2(tmp) / bnorm;
    };

    std::vector<double> r1(n), r2(n), y(n), v(n), w(n, 0.0), w1(n, 0.0), w2(n, 0.0);
    a.multiply(out.x, r1);
    for (std::size_t i = 0; i < n; ++i) r1[i] = b[i] - r1[i];
    for (std::size_t i = 0; i < n; ++i) y[i] = pinv[i] * r1[i];
    double beta1 = dot(r1, y);
    if (beta1 < 0.0) throw SolverFailure("minres: preconditioner is not positive definite");
    beta1 = std::sqrt(beta1);

    out.relative_residual = norm2(r1) / bnorm;
    if (out.relative_residual <= cfg.tolerance) {
        out.converged = true;
        return out;
    }
    const double initial_relative = out.relative_residual;
    r2 = r1;

    double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
    double cs = -1.0, sn = 0.0;
    constexpr double tiny = std::numeric_limits<double>::epsilon();

    for (std::size_t it = 1; it <= max_it; ++it) {
        const double s = 1.0 / beta;
        for (std::size_t i = 0; i < n; ++i) v[i] = s * y[i];
        a.multiply(v, y);
        if (it >= 2) {
            const double f = beta / oldb;
            for (std::size_t i = 0; i < n; ++i) y[i] -= f * r1[i];
        }
        const double alfa = dot(v, y);
        const double f = alfa / beta;
        for (std::size_t i = 0; i < n; ++i) y[i] -= f * r2[i];
        std::swap(r1, r2);
        r2 = y;
        for (std::size_t i = 0; i < n; ++i) y[i] = pinv[i] * r2[i];
        oldb = beta;
        beta = dot(r2, y);
        if (!std::isfinite(beta) || !std::isfinite(alfa)) throw SolverFailure("minres: non-finite value in recurrence");
        if (beta < 0.0) throw SolverFailure("minres: preconditioner is not positive definite");
        beta = std::sqrt(beta);

        // Apply the previous rotation, then build the next one.
        const double oldeps = epsln;
        const double delta = cs * dbar + sn * alfa;
        const double gbar = sn * dbar - cs * alfa;
        epsln = sn * beta;
        dbar = -cs * beta;
        const double gamma = std::max(std::hypot(gbar, beta), tiny);
        cs = gbar / gamma;
        sn = beta / gamma;
        const double phi = cs * phibar;
        phibar = sn * phibar;

        std::swap(w1, w2);
        std::swap(w2, w);
        const double denom = 1.0 / gamma;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = (v[i] - oldeps * w1[i] - delta * w2[i]) * denom;
            out.x[i] += phi * w[i];
        }
        out.iterations = it;

        // Relative to ‖b‖; exact without preconditioning, scaled otherwise.
        const double estimate = phibar / beta1 * initial_relative;
        if (cfg.record_history) out.history.push_back(phibar);
        if (estimate <= cfg.tolerance || beta == 0.0) {
            out.relative_residual = true_residual();
            if (out.relative_residual <= cfg.tolerance) {
                out.converged = true;
                return out;
            }
            if (beta == 0.0) break;
        }
    }
    out.relative_residual = true_residual();
    out.converged = out.relative_residual <= cfg.tolerance;
    return out;
}

}  // namespace lgns
