#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rotns/coriolis.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/operators.hpp"
#include "rotns/transform.hpp"

namespace rotns {

/// Shared per-grid machinery: FFT plans and the dyadic partition. Not safe
/// for concurrent use (the transform owns scratch buffers).
struct SpectralWorkspace {
    FrequencyGrid grid;
    FourierTransform transform;
    DyadicPartition partition;

    explicit SpectralWorkspace(const FrequencyGrid& g)
        : grid(g), transform(g), partition(DyadicPartition::build(g)) {}
};

enum class SolveStatus { Converged, NonConvergence, Blowup };

struct StationarySolveConfig {
    double tol = 1e-10;
    int max_iter = 100;
    /// Convergence norm; defaults to FB^{2-3/p}_{p,p} with p = 4.
    FourierBesovParams norm_params{2.0 - 3.0 / 4.0, 4.0, 4.0};
    /// Iterate-norm blowup threshold.
    double divergence_guard = 1e8;
    bool nonlinear = true;
    /// Optional under-relaxation for near-critical forces (1 = plain
    /// Picard, the scheme the fixed-point argument uses).
    double relaxation = 1.0;
    enum class Start { Kernel, Zero };
    Start start = Start::Kernel;

    void validate() const;
};

struct TransientSolveConfig {
    double dt = 1e-2;
    double t_end = 1.0;
    int record_stride = 1;
    FourierBesovParams norm_params{2.0 - 3.0 / 4.0, 4.0, 4.0};
    double divergence_guard = 1e8;
    bool nonlinear = true;

    void validate() const;
};

struct SolveReport {
    SolveStatus status = SolveStatus::NonConvergence;
    bool converged = false;
    int iterations = 0;
    /// Relative successive-change residuals, one per iteration/step.
    std::vector<double> residual_history;
    /// (norm name, value) per iteration/step.
    std::vector<std::pair<std::string, double>> norm_history;
    /// Measured ||B(u,u)|| / ||u||^2 at the final iterate (the bilinear
    /// constant of the fixed-point lemma).
    double contraction_estimate = 0.0;
    /// ||K P F|| in the convergence norm (the lemma's ||y||).
    double first_iterate_norm = 0.0;
    /// Worst per-iteration diagnostics.
    double max_divergence = 0.0;
    double max_hermitian_asymmetry = 0.0;
    int blowup_iteration = -1;
};

struct StationarySolution {
    SpectralVectorField u;
    SolveReport report;
};

/// Picard iteration for the stationary integral equation
///   u = K P F - K P div(u (x) u),   K = int_0^inf G(t) dt,
/// starting from the lemma's natural first iterate u0 = K P F. Stops when
/// the relative change in the configured FB norm drops below tol;
/// NonConvergence (max_iter) and Blowup (guard exceeded) return the report
/// for diagnosis.
StationarySolution solve_stationary(const SpectralVectorField& force,
                                    const CoriolisParams& params,
                                    const StationarySolveConfig& cfg,
                                    SpectralWorkspace& ws);

struct TransientSample {
    double t = 0.0;
    double norm = 0.0;
    double stationary_residual = 0.0;
};

struct TransientResult {
    SpectralVectorField u;
    std::vector<TransientSample> samples;
    SolveReport report;
};

/// First-order exponential integrator for the mild formulation:
///   u(t+dt) = G(dt) u(t) + int_0^dt G(s) ds . P[F - div(u(t) (x) u(t))].
/// The linear flow is exact per mode; the nonlinearity is frozen over each
/// step. Records the configured FB norm (and the stationary-equation
/// residual, a steady-state diagnostic) every record_stride steps.
TransientResult solve_transient(const SpectralVectorField& u0,
                                const SpectralVectorField* force,
                                const CoriolisParams& params,
                                const TransientSolveConfig& cfg, SpectralWorkspace& ws);

/// FB norm of P[div(u (x) u)] + Omega P[e3 x u] + nu |xi|^2 u - P F
/// (pressure eliminated by projection).
double pde_residual(const SpectralVectorField& u, const SpectralVectorField& force,
                    const CoriolisParams& params, const FourierBesovParams& norm_params,
                    SpectralWorkspace& ws);

/// p from the divergence of the momentum balance:
///   phat = i xi . [ (div(u (x) u))^ + Omega (e3 x u)^ - Fhat ] / |xi|^2,
/// zero mode pinned.
SpectralField recover_pressure(const SpectralVectorField& u,
                               const SpectralVectorField& force,
                               const CoriolisParams& params, SpectralWorkspace& ws);

/// FB norm of the full (unprojected) momentum residual
///   (div(u (x) u))^ + Omega (e3 x u)^ + nu |xi|^2 u + i xi p - Fhat.
double momentum_residual(const SpectralVectorField& u, const SpectralField& pressure,
                         const SpectralVectorField& force, const CoriolisParams& params,
                         const FourierBesovParams& norm_params, SpectralWorkspace& ws);

}  // namespace rotns
