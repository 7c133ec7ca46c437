#pragma once

#include <cstdint>
#include <functional>

#include "rotns/spectral_field.hpp"

namespace rotns {

/// Deterministic RNG for randomized fields. Uniform deviates come from the
/// top 53 bits of a xorshift-multiply stream so that sequences are stable
/// across standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal();

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Hermitian-symmetrize in place: c(-xi) <- conj(c(xi)) averaged, so the
/// field represents real physical data.
void hermitian_symmetrize(SpectralField& f);
void hermitian_symmetrize(SpectralVectorField& f);

/// Random Hermitian scalar field supported on 0 < |k_axis| <= max_wavenumber
/// (signed components), zero-mode-free.
SpectralField random_band_limited_scalar(const FrequencyGrid& grid, int max_wavenumber,
                                         double amplitude, Rng& rng);

/// Random Hermitian, divergence-free, zero-mode-free vector field with
/// signed components bounded by max_wavenumber.
SpectralVectorField random_divergence_free_field(const FrequencyGrid& grid,
                                                 int max_wavenumber, double amplitude,
                                                 Rng& rng);

/// Random Hermitian vector field (not projected), band-limited.
SpectralVectorField random_vector_field(const FrequencyGrid& grid, int max_wavenumber,
                                        double amplitude, Rng& rng);

/// Hermitian field supported on the annulus r_min <= |xi| <= r_max
/// intersected with |xi3| >= xi3_min, normalized to max amplitude
/// `amplitude`; random phases from rng.
SpectralVectorField annulus_force(const FrequencyGrid& grid, double r_min, double r_max,
                                  double xi3_min, double amplitude, Rng& rng);

/// Force carried by the vertical modes (0, 0, +-k) only (so |xi3| = |xi|).
SpectralVectorField axis_force(const FrequencyGrid& grid, int k, double amplitude);

/// Hermitian field supported on the horizontal-spectrum slice {xi3 = 0},
/// radius at most r_max.
SpectralVectorField planar_force(const FrequencyGrid& grid, double r_max,
                                 double amplitude, Rng& rng);

/// Random real samples in [-amplitude, amplitude].
PhysicalVectorField random_physical_field(const FrequencyGrid& grid, double amplitude,
                                          Rng& rng);

}  // namespace rotns
