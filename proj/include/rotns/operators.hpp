#pragma once

#include "rotns/spectral_field.hpp"
#include "rotns/transform.hpp"

namespace rotns {

/// Per-mode orthogonal projection I - xi xi^T / |xi|^2 onto divergence-free
/// fields. The zero mode is left untouched (it stays 0).
void leray_project_in_place(SpectralVectorField& u);
SpectralVectorField leray_project(const SpectralVectorField& u);

/// e3 x u = Ju per mode: (u1, u2, u3) -> (-u2, u1, 0). The Coriolis
/// parameter Omega scales this at the call site.
SpectralVectorField coriolis_term(const SpectralVectorField& u);

/// Zero all modes outside the 2/3-rule cube |k_axis| <= dealias_limit().
void dealias_in_place(SpectralField& f);
void dealias_in_place(SpectralVectorField& u);

/// Largest amplitude at modes beyond the dealias cutoff.
double energy_beyond_cutoff(const SpectralField& f);
double energy_beyond_cutoff(const SpectralVectorField& u);

struct NonlinearDiagnostics {
    double input_divergence = 0.0;
    bool divergence_warning = false;
};

/// Spectral coefficients of div(u (x) u), computed pseudo-spectrally:
/// dealias-truncate the input, take the 6 distinct products u_i u_j in
/// physical space, transform back and contract with i xi_j, then truncate
/// the output. Divergence form equals the convective form only for
/// divergence-free input; a warning-level diagnostic reports violations.
SpectralVectorField nonlinear_term(const SpectralVectorField& u,
                                   const FourierTransform& transform,
                                   NonlinearDiagnostics* diag = nullptr);

/// Pseudo-spectral pointwise product of two scalar spectral fields
/// (circular convolution of amplitudes); optionally dealias-truncated.
SpectralField multiply(const SpectralField& f, const SpectralField& g,
                       const FourierTransform& transform, bool dealias);

}  // namespace rotns
