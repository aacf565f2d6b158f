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

// Command-line front end: single runs and convergence sweeps.
//
// Exit status: 0 on success, 1 on bad usage, 2 on a CFL violation,
// 3 on a solver failure.

#include "lgns/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace lgns;

struct CommonOptions {
    int dim = 2;
    std::string law = "linear";
    double gamma = 0.0;
    double delta0 = 1.0;
    double t_end = 1.0;
    double tol = 1e-10;
    std::size_t max_iter = 0;
    bool jacobi = false;
    double cfl_warn = 0.5;
    double cfl_abort = 1.0;
    bool exclude_initial = false;
    bool verbose = false;
    std::string out;
};

void add_common(CLI::App* app, CommonOptions& o)
{
    app->add_option("--dim", o.dim, "Space dimension")->check(CLI::IsMember({2, 3}))->envname("LGNS_DIM");
    app->add_option("--dt-law", o.law, "Time-step law: dt = gamma*h or gamma*h^2")
        ->check(CLI::IsMember({"linear", "quadratic"}))
        ->envname("LGNS_DT_LAW");
    app->add_option("--gamma", o.gamma, "Time-step constant (default 4 for linear, 256 for quadratic)")
        ->check(CLI::PositiveNumber)
        ->envname("LGNS_GAMMA");
    app->add_option("--delta0", o.delta0, "Pressure stabilization constant")->check(CLI::PositiveNumber)->envname("LGNS_DELTA0");
    app->add_option("--t-end", o.t_end, "Final time")->check(CLI::PositiveNumber)->envname("LGNS_T_END");
    app->add_option("--tol", o.tol, "MINRES relative residual tolerance")->envname("LGNS_TOL");
    app->add_option("--max-iter", o.max_iter, "MINRES iteration cap (0: 20 x system size)")->envname("LGNS_MAX_ITER");
    app->add_flag("--jacobi", o.jacobi, "Diagonal preconditioning for MINRES")->envname("LGNS_JACOBI");
    app->add_option("--cfl-warn", o.cfl_warn, "Warn when dt*|u_h|_{1,inf} reaches this value")->envname("LGNS_CFL_WARN");
    app->add_option("--cfl-abort", o.cfl_abort, "Abort when dt*|u_h|_{1,inf} reaches this value")->envname("LGNS_CFL_ABORT");
    app->add_flag("--exclude-initial", o.exclude_initial, "Leave n = 0 out of the l-infinity error maximum");
    app->add_flag("-v,--verbose", o.verbose, "Log every time step to stderr");
    app->add_option("--out", o.out, "CSV output file (default: stdout)")->envname("LGNS_OUT");
}

RunConfig make_config(const CommonOptions& o, int n, double nu)
{
    RunConfig c;
    c.dim = o.dim;
    c.problem = o.dim == 2 ? "mms2d" : "mms3d";
    c.n = n;
    c.nu = nu;
    c.law = parse_dt_law(o.law);
    c.gamma = o.gamma > 0.0 ? o.gamma : (c.law == DtLaw::linear ? 4.0 : 256.0);
    c.delta0 = o.delta0;
    c.t_end = o.t_end;
    c.solver.tolerance = o.tol;
    c.solver.max_iterations = o.max_iter;
    c.solver.jacobi = o.jacobi;
    c.cfl_warn = o.cfl_warn;
    c.cfl_abort = o.cfl_abort;
    c.linf_includes_initial = !o.exclude_initial;
    c.out_path = o.out;
    return c;
}

StepCallback step_logger(bool verbose)
{
    return [verbose](const StepRecord& r) {
        if (r.cfl_warning) {
            std::fprintf(stderr, "warning: step %d: dt*|u_h|_{1,inf} = %.3f\n", r.n, r.cfl_product);
        }
        if (verbose) {
            std::fprintf(stderr, "step %4d  t=%.6f  minres_its=%zu  residual=%.2e  cfl=%.3f  clamped=%zu\n", r.n, r.t,
                         r.iterations, r.residual, r.cfl_product, r.clamped_feet);
        }
    };
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

template <int Dim>
void write_fields(const std::string& path, const TimeState<Dim>& s, const SimplexMesh<Dim>& mesh)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "vertex";
    for (int i = 0; i < Dim; ++i) os << ",x" << i + 1;
    for (int i = 0; i < Dim; ++i) os << ",u" << i + 1;
    os << ",p\n";
    os.precision(12);
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        os << v;
        for (int i = 0; i < Dim; ++i) os << ',' << mesh.vertex(v)[i];
        for (int i = 0; i < Dim; ++i) os << ',' << s.u.at(i, v);
        os << ',' << s.p.at(0, v) << '\n';
    }
}

template <int Dim>
ErrorReport run_single(const RunConfig& cfg, const StepCallback& log)
{
    return run_with_errors<Dim>(cfg, log, [&cfg](const TimeState<Dim>& s, const SimplexMesh<Dim>& mesh) {
        if (!cfg.fields_path.empty()) write_fields(cfg.fields_path, s, mesh);
        if (!cfg.mesh_path.empty()) {
            std::ofstream os(cfg.mesh_path);
            if (!os) throw std::runtime_error("cannot open " + cfg.mesh_path + " for writing");
            write_vtk(mesh, os);
        }
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lagrange-Galerkin Navier-Stokes solver on the unit square and cube"};
    app.set_config("--config", "", "Read options from a TOML file");
    app.require_subcommand(1);

    CommonOptions run_opts;
    int run_n = 64;
    double run_nu = 0.1;
    std::string fields_path, mesh_path;
    auto* run = app.add_subcommand("run", "Run one case and report Er1/Er2");
    add_common(run, run_opts);
    run->add_option("--n", run_n, "Divisions per side")->check(CLI::Range(2, 1 << 14))->envname("LGNS_N");
    run->add_option("--nu", run_nu, "Viscosity")->check(CLI::PositiveNumber)->envname("LGNS_NU");
    run->add_option("--export-fields", fields_path, "Write final u_h, p_h per vertex as CSV");
    run->add_option("--export-mesh", mesh_path, "Write the mesh as legacy VTK");

    CommonOptions sweep_opts;
    std::vector<int> n_list{64, 128};
    std::vector<double> nu_list{0.1};
    auto* sweep = app.add_subcommand("sweep", "Run a grid of (nu, N) cases and print a CSV table with slopes");
    add_common(sweep, sweep_opts);
    sweep->add_option("--n-list", n_list, "Divisions per side, ascending")->delimiter(',')->envname("LGNS_N_LIST");
    sweep->add_option("--nu-list", nu_list, "Viscosities")->delimiter(',')->envname("LGNS_NU_LIST");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            RunConfig cfg = make_config(run_opts, run_n, run_nu);
            cfg.fields_path = fields_path;
            cfg.mesh_path = mesh_path;
            cfg.validate();
            const auto log = step_logger(run_opts.verbose);
            const auto report = cfg.dim == 2 ? run_single<2>(cfg, log) : run_single<3>(cfg, log);
            std::fprintf(stderr, "d=%d N=%d nu=%g dt=%g steps=%d Er1=%.4e Er2=%.4e wall=%.1fs\n", cfg.dim, cfg.n, cfg.nu,
                         cfg.dt(), report.steps, report.er1, report.er2, report.wall_seconds);
            Output out(cfg.out_path);
            write_csv_header(out.stream());
            write_csv_row(out.stream(), SweepRow{report, std::nullopt, std::nullopt});
        } else {
            RunConfig base = make_config(sweep_opts, n_list.front(), nu_list.front());
            base.validate();
            Output out(base.out_path);
            write_csv_header(out.stream());
            out.stream().flush();
            run_sweep(base, n_list, nu_list,
                      [&out](const SweepRow& row) {
                          write_csv_row(out.stream(), row);
                          out.stream().flush();
                      },
                      step_logger(sweep_opts.verbose));
        }
    } catch (const CflViolation& e) {
        std::fprintf(stderr, "error: CFL violation: %s\n", e.what());
        return 2;
    } catch (const SolverFailure& e) {
        std::fprintf(stderr, "error: solver failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
