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
 * @file report.hpp
 * @brief Relative errors against the interpolated exact solution,
 *        convergence slopes and sweep tables.
 *
 *   Er1 = (‖u_h − Π_h u‖_{l²(H¹)} + ‖p_h − Π_h p‖_{l²(L²)})
 *         / (‖Π_h u‖_{l²(H¹)} + ‖Π_h p‖_{l²(L²)})
 *   Er2 = ‖u_h − Π_h u‖_{l∞(L²)} / ‖Π_h u‖_{l∞(L²)}
 *
 * where ‖v‖_{l²(X)} = (Δt Σ_{n=1}^{N_T} ‖v^n‖²_X)^{1/2} and the l∞ maximum
 * runs over n = 0..N_T (n = 0 can be dropped through RunConfig).
 */
#pragma once

#include "lgns/driver.hpp"
#include "lgns/fem.hpp"
#include "lgns/problems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgns {

template <int Dim>
class ErrorAccumulator {
public:
    ErrorAccumulator(double dt, int expected_steps, bool linf_includes_initial = true)
        : dt_(dt), expected_steps_(expected_steps), include_initial_(linf_includes_initial)
    {
    }

    /// Fold in the state at t^n. The n = 0 state only touches the l∞ terms.
    void accumulate(const TimeState<Dim>& state, const ManufacturedProblem<Dim>& problem)
    {
        const auto& mesh = state.u.mesh();
        const double t = state.t;
        const auto iu = interpolate(mesh, Dim, [&problem, t](const Point<Dim>& x) { return problem.velocity(x, t); });
        const auto ip = interpolate(mesh, 1, [&problem, t](const Point<Dim>& x) { return problem.pressure(x, t); });
        accumulate(state.n, state.u, state.p, iu, ip);
    }

    /// Same, with the interpolants supplied by the caller.
    void accumulate(int n, const FEField<Dim>& u, const FEField<Dim>& p, const FEField<Dim>& iu,
                    const FEField<Dim>& ip)
    {
        const FEField<Dim> eu = u - iu;
        const FEField<Dim> ep = p - ip;
        const double eu_l2sq = l2_norm_squared(eu);

        if (n > 0 || include_initial_) {
            linf_err_ = std::max(linf_err_, std::sqrt(eu_l2sq));
            linf_ref_ = std::max(linf_ref_, std::sqrt(l2_norm_squared(iu)));
        }
        if (n == 0) return;

        sum_u_err_ += dt_ * (eu_l2sq + h1_seminorm_squared(eu));
        sum_p_err_ += dt_ * l2_norm_squared(ep);
        sum_u_ref_ += dt_ * (l2_norm_squared(iu) + h1_seminorm_squared(iu));
        sum_p_ref_ += dt_ * l2_norm_squared(ip);
        ++steps_;
    }

    [[nodiscard]] int steps() const { return steps_; }
    [[nodiscard]] double velocity_l2h1_error() const { return std::sqrt(sum_u_err_); }
    [[nodiscard]] double pressure_l2l2_error() const { return std::sqrt(sum_p_err_); }
    [[nodiscard]] double velocity_linfl2_error() const { return linf_err_; }

    [[nodiscard]] double er1() const
    {
        require_complete();
        return (std::sqrt(sum_u_err_) + std::sqrt(sum_p_err_)) / (std::sqrt(sum_u_ref_) + std::sqrt(sum_p_ref_));
    }

    [[nodiscard]] double er2() const
    {
        require_complete();
        return linf_err_ / linf_ref_;
    }

private:
    void require_complete() const
    {
        if (steps_ != expected_steps_) {
            throw std::logic_error("ErrorAccumulator: " + std::to_string(steps_) + " of " +
                                   std::to_string(expected_steps_) + " steps accumulated");
        }
    }

    double dt_;
    int expected_steps_;
    bool include_initial_;
    int steps_ = 0;
    double sum_u_err_ = 0.0, sum_p_err_ = 0.0, sum_u_ref_ = 0.0, sum_p_ref_ = 0.0;
    double linf_err_ = 0.0, linf_ref_ = 0.0;
};

struct ErrorReport {
    RunConfig config;
    double h = 0.0;
    double dt = 0.0;
    double er1 = 0.0;
    double er2 = 0.0;
    int steps = 0;
    double wall_seconds = 0.0;
    std::size_t initial_iterations = 0;
    std::vector<StepRecord> records;

    [[nodiscard]] double average_iterations() const
    {
        if (records.empty()) return 0.0;
        double s = 0.0;
        for (const auto& r : records) s += static_cast<double>(r.iterations);
        return s / static_cast<double>(records.size());
    }
    [[nodiscard]] double max_cfl() const
    {
        double m = 0.0;
        for (const auto& r : records) m = std::max(m, r.cfl_product);
        return m;
    }
    [[nodiscard]] double max_residual() const
    {
        double m = 0.0;
        for (const auto& r : records) m = std::max(m, r.residual);
        return m;
    }
    [[nodiscard]] std::size_t clamped_feet() const
    {
        std::size_t s = 0;
        for (const auto& r : records) s += r.clamped_feet;
        return s;
    }
    [[nodiscard]] std::size_t total_feet() const
    {
        std::size_t s = 0;
        for (const auto& r : records) s += r.feet;
        return s;
    }
};

/// Empirical order between meshes N and 2N: log₂(E_coarse / E_fine).
inline double slope(double coarse, double fine)
{
    if (!(coarse > 0.0) || !(fine > 0.0)) throw std::invalid_argument("slope: errors must be positive");
    return std::log2(coarse / fine);
}

using StepCallback = std::function<void(const StepRecord&)>;

template <int Dim>
ErrorReport run_with_errors(const RunConfig& cfg, const StepCallback& on_step = {},
                            const std::function<void(const TimeState<Dim>&, const SimplexMesh<Dim>&)>& on_final = {})
{
    const auto start = std::chrono::steady_clock::now();
    Simulation<Dim> sim(cfg);
    ErrorAccumulator<Dim> acc(cfg.dt(), cfg.num_steps(), cfg.linf_includes_initial);
    ErrorReport report;
    report.config = cfg;
    report.h = cfg.h();
    report.dt = cfg.dt();

    const auto final_state = sim.run([&](const TimeState<Dim>& state, const StepRecord& rec) {
        acc.accumulate(state, sim.problem());
        if (state.n == 0) return;
        report.records.push_back(rec);
        if (on_step) on_step(rec);
    });
    if (on_final) on_final(final_state, sim.mesh());

    report.er1 = acc.er1();
    report.er2 = acc.er2();
    report.steps = acc.steps();
    report.initial_iterations = sim.initial_iterations();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Runtime dimension dispatch.
inline ErrorReport run_with_errors(const RunConfig& cfg, const StepCallback& on_step = {})
{
    cfg.validate();
    return cfg.dim == 2 ? run_with_errors<2>(cfg, on_step) : run_with_errors<3>(cfg, on_step);
}

struct SweepRow {
    ErrorReport report;
    std::optional<double> er1_slope;
    std::optional<double> er2_slope;
};

inline constexpr const char* kCsvHeader = "d,nu,N,h,dt,law,Er1,Er1_slope,Er2,Er2_slope,steps,wall_s,minres_iters_avg";

inline void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& os, const SweepRow& row)
{
    const auto& r = row.report;
    const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6e", v);
        return std::string(buf);
    };
    const auto opt = [](const std::optional<double>& v) {
        if (!v) return std::string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *v);
        return std::string(buf);
    };
    os << r.config.dim << ',' << num(r.config.nu) << ',' << r.config.n << ',' << num(r.h) << ',' << num(r.dt) << ','
       << to_string(r.config.law) << ',' << num(r.er1) << ',' << opt(row.er1_slope) << ',' << num(r.er2) << ','
       << opt(row.er2_slope) << ',' << r.steps << ',' << num(r.wall_seconds) << ',' << num(r.average_iterations())
       << '\n';
}

/// Runs `base` for every (ν, N) pair. Slopes are attached when N doubles
/// from the previous entry of the same ν. `on_row` sees each row as soon as
/// it is finished so partial results survive a later failure.
inline std::vector<SweepRow> run_sweep(const RunConfig& base, const std::vector<int>& n_list,
                                       const std::vector<double>& nu_list,
                                       const std::function<void(const SweepRow&)>& on_row = {},
                                       const StepCallback& on_step = {})
{
    if (n_list.empty() || nu_list.empty()) throw std::invalid_argument("run_sweep: empty N or nu list");
    if (!std::is_sorted(n_list.begin(), n_list.end())) throw std::invalid_argument("run_sweep: N list must be ascending");
    std::vector<SweepRow> rows;
    for (double nu : nu_list) {
        std::optional<SweepRow> prev;
        for (int n : n_list) {
            RunConfig cfg = base;
            cfg.nu = nu;
            cfg.n = n;
            SweepRow row{run_with_errors(cfg, on_step), std::nullopt, std::nullopt};
            if (prev && prev->report.config.n * 2 == n) {
                row.er1_slope = slope(prev->report.er1, row.report.er1);
                row.er2_slope = slope(prev->report.er2, row.report.er2);
            }
            if (on_row) on_row(row);
            rows.push_back(row);
            prev = row;
        }
    }
    return rows;
}

}  // namespace lgns
