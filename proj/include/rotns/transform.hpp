#pragma once

#include <memory>
#include <vector>

#include "rotns/spectral_field.hpp"

namespace rotns {

/// FFT bridge between lattice representations.
///
/// Normalization: spectral amplitudes are the exponential-series
/// coefficients of the trigonometric interpolant, i.e.
///   f(x_m) = sum_k fhat_k exp(+i xi_k . x_m),
///   fhat_k = n^-3 sum_m f(x_m) exp(-i xi_k . x_m),
/// so a single mode cos(xi . x) carries amplitude 1/2 at +-xi.
///
/// Plans are created once per grid with FFTW_ESTIMATE (deterministic).
/// Instances are not safe for concurrent use; they own scratch buffers.
class FourierTransform {
  public:
    explicit FourierTransform(const FrequencyGrid& grid);
    ~FourierTransform();

    FourierTransform(const FourierTransform&) = delete;
    FourierTransform& operator=(const FourierTransform&) = delete;

    const FrequencyGrid& grid() const { return grid_; }

    /// Unnormalized synthesis: phys[m] = sum_k spec[k] e^{+i 2 pi k.m / n}.
    void to_physical(const std::vector<Complex>& spec,
                     std::vector<Complex>& phys) const;

    /// Analysis with 1/n^3: inverse of to_physical.
    void to_spectral(const std::vector<Complex>& phys,
                     std::vector<Complex>& spec) const;

    SpectralField forward(const PhysicalField& f) const;
    SpectralVectorField forward(const PhysicalVectorField& f) const;

    /// Requires Hermitian-symmetric input; the imaginary residue of the
    /// synthesized samples is discarded (it is at roundoff level for
    /// symmetric fields).
    PhysicalField inverse(const SpectralField& f) const;
    PhysicalVectorField inverse(const SpectralVectorField& f) const;

  private:
    struct Impl;
    FrequencyGrid grid_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace rotns
