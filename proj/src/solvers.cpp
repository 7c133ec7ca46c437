#include "rotns/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace rotns {

namespace {
constexpr double kTiny = 1e-300;
}

void StationarySolveConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("StationarySolveConfig: tol must be > 0");
    if (max_iter < 1)
        throw std::invalid_argument("StationarySolveConfig: max_iter must be >= 1");
    if (!(divergence_guard > 0.0))
        throw std::invalid_argument("StationarySolveConfig: divergence_guard must be > 0");
    if (!(relaxation > 0.0 && relaxation <= 1.0))
        throw std::invalid_argument("StationarySolveConfig: relaxation must be in (0, 1]");
    norm_params.validate();
}

void TransientSolveConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("TransientSolveConfig: dt must be > 0");
    if (!(t_end >= dt))
        throw std::invalid_argument("TransientSolveConfig: t_end must be >= dt");
    if (record_stride < 1)
        throw std::invalid_argument("TransientSolveConfig: record_stride must be >= 1");
    if (!(divergence_guard > 0.0))
        throw std::invalid_argument("TransientSolveConfig: divergence_guard must be > 0");
    norm_params.validate();
}

StationarySolution solve_stationary(const SpectralVectorField& force,
                                    const CoriolisParams& params,
                                    const StationarySolveConfig& cfg,
                                    SpectralWorkspace& ws) {
    cfg.validate();
    params.validate();

    SpectralVectorField pf = leray_project(force);
    SpectralVectorField first = apply_stationary_kernel(pf, params);

    SolveReport report;
    report.first_iterate_norm = fb_norm(first, cfg.norm_params, ws.partition);

    SpectralVectorField u =
        cfg.start == StationarySolveConfig::Start::Kernel ? first : SpectralVectorField(ws.grid);
    SpectralVectorField bu(ws.grid);

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        if (cfg.nonlinear)
            bu = apply_stationary_kernel(leray_project(nonlinear_term(u, ws.transform)),
                                         params);
        SpectralVectorField u_next = first;
        u_next -= bu;
        if (cfg.relaxation != 1.0) {
            u_next *= cfg.relaxation;
            u_next += (1.0 - cfg.relaxation) * u;
        }

        double un = fb_norm(u_next, cfg.norm_params, ws.partition);
        double diff = fb_norm(u_next - u, cfg.norm_params, ws.partition);
        double rel = diff / std::max(un, kTiny);

        report.iterations = iter;
        report.residual_history.push_back(rel);
        report.norm_history.emplace_back("fb", un);
        report.max_divergence = std::max(report.max_divergence, u_next.max_divergence());
        report.max_hermitian_asymmetry =
            std::max(report.max_hermitian_asymmetry, u_next.hermitian_asymmetry());

        u = std::move(u_next);

        if (un > cfg.divergence_guard) {
            report.status = SolveStatus::Blowup;
            report.blowup_iteration = iter;
            return {std::move(u), std::move(report)};
        }
        if (rel < cfg.tol || un == 0.0) {
            report.status = SolveStatus::Converged;
            report.converged = true;
            break;
        }
    }

    double un = fb_norm(u, cfg.norm_params, ws.partition);
    if (cfg.nonlinear && un > 0.0) {
        SpectralVectorField bfinal = apply_stationary_kernel(
            leray_project(nonlinear_term(u, ws.transform)), params);
        report.contraction_estimate =
            fb_norm(bfinal, cfg.norm_params, ws.partition) / (un * un);
    }
    return {std::move(u), std::move(report)};
}

TransientResult solve_transient(const SpectralVectorField& u0,
                                const SpectralVectorField* force,
                                const CoriolisParams& params,
                                const TransientSolveConfig& cfg, SpectralWorkspace& ws) {
    cfg.validate();
    params.validate();

    SpectralVectorField u = leray_project(u0);
    SpectralVectorField pf(ws.grid);
    SpectralVectorField zero_force(ws.grid);
    if (force) pf = leray_project(*force);

    long steps = std::lround(cfg.t_end / cfg.dt);
    if (steps < 1) steps = 1;

    TransientResult result{std::move(u), {}, {}};
    SolveReport& report = result.report;

    double prev_norm = fb_norm(result.u, cfg.norm_params, ws.partition);
    for (long step = 1; step <= steps; ++step) {
        SpectralVectorField rhs = pf;
        if (cfg.nonlinear) rhs -= nonlinear_term(result.u, ws.transform);
        leray_project_in_place(rhs);

        SpectralVectorField u_next = apply_semigroup(cfg.dt, result.u, params);
        duhamel_step(u_next, cfg.dt, rhs, params);

        double un = fb_norm(u_next, cfg.norm_params, ws.partition);
        report.iterations = static_cast<int>(step);
        report.residual_history.push_back(std::abs(un - prev_norm) /
                                          std::max(un, kTiny));
        report.norm_history.emplace_back("fb", un);
        report.max_divergence = std::max(report.max_divergence, u_next.max_divergence());
        report.max_hermitian_asymmetry =
            std::max(report.max_hermitian_asymmetry, u_next.hermitian_asymmetry());
        prev_norm = un;
        result.u = std::move(u_next);

        if (un > cfg.divergence_guard) {
            report.status = SolveStatus::Blowup;
            report.blowup_iteration = static_cast<int>(step);
            return result;
        }

        if (step % cfg.record_stride == 0 || step == steps) {
            TransientSample s;
            s.t = step * cfg.dt;
            s.norm = un;
            s.stationary_residual = pde_residual(
                result.u, force ? *force : zero_force, params, cfg.norm_params, ws);
            result.samples.push_back(s);
        }
    }
    report.status = SolveStatus::Converged;
    report.converged = true;
    return result;
}

namespace {

/// (div(u (x) u))^ + Omega (e3 x u)^ - Fhat, the common part of the
/// residual and pressure computations.
SpectralVectorField momentum_forcing_gap(const SpectralVectorField& u,
                                         const SpectralVectorField& force,
                                         const CoriolisParams& params,
                                         SpectralWorkspace& ws) {
    SpectralVectorField g = nonlinear_term(u, ws.transform);
    SpectralVectorField ju = coriolis_term(u);
    ju *= params.omega;
    g += ju;
    g -= force;
    return g;
}

void add_viscous_term(SpectralVectorField& r, const SpectralVectorField& u, double nu) {
    for (std::size_t m = 1; m < u.size(); ++m) {
        Vec3 xi = u.grid().wavevector(m);
        double k2 = norm2(xi);
        CVec3 v = u.mode(m);
        CVec3 a = r.mode(m);
        r.set_mode(m, {a[0] + nu * k2 * v[0], a[1] + nu * k2 * v[1],
                       a[2] + nu * k2 * v[2]});
    }
}

}  // namespace

double pde_residual(const SpectralVectorField& u, const SpectralVectorField& force,
                    const CoriolisParams& params, const FourierBesovParams& norm_params,
                    SpectralWorkspace& ws) {
    SpectralVectorField r = momentum_forcing_gap(u, force, params, ws);
    leray_project_in_place(r);
    add_viscous_term(r, u, params.nu);
    return fb_norm(r, norm_params, ws.partition);
}

SpectralField recover_pressure(const SpectralVectorField& u,
                               const SpectralVectorField& force,
                               const CoriolisParams& params, SpectralWorkspace& ws) {
    SpectralVectorField g = momentum_forcing_gap(u, force, params, ws);
    SpectralField p(ws.grid);
    for (std::size_t m = 1; m < g.size(); ++m) {
        Vec3 xi = ws.grid.wavevector(m);
        p[m] = Complex(0.0, 1.0) * dot(xi, g.mode(m)) / norm2(xi);
    }
    p.pin_zero_mode();
    return p;
}

double momentum_residual(const SpectralVectorField& u, const SpectralField& pressure,
                         const SpectralVectorField& force, const CoriolisParams& params,
                         const FourierBesovParams& norm_params, SpectralWorkspace& ws) {
    SpectralVectorField r = momentum_forcing_gap(u, force, params, ws);
    add_viscous_term(r, u, params.nu);
    for (std::size_t m = 1; m < r.size(); ++m) {
        Vec3 xi = ws.grid.wavevector(m);
        Complex grad = Complex(0.0, 1.0) * pressure[m];
        CVec3 a = r.mode(m);
        r.set_mode(m, {a[0] + xi[0] * grad, a[1] + xi[1] * grad, a[2] + xi[2] * grad});
    }
    return fb_norm(r, norm_params, ws.partition);
}

}  // namespace rotns
