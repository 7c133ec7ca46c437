#pragma once

#include <limits>

#include "rotns/operators.hpp"
#include "rotns/spectral_field.hpp"
#include "rotns/transform.hpp"

namespace rotns {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Indices (s, p, q) of a Fourier-Besov space FB^s_{p,q}; p and q may be
/// the symbolic value infinity.
struct FourierBesovParams {
    double s = 0.0;
    double p = 2.0;
    double q = 2.0;

    void validate() const;
};

/// Dyadic partition of unity on frequency radii.
///
/// The radial profile is the normalized bump
///   phi(r) = chi(r) / sum_j chi(2^-j r),
///   chi(r) = exp(-1 / ((r - 3/4)(8/3 - r)))  on (3/4, 8/3), 0 elsewhere,
/// so sum_j phi(2^-j r) = 1 for every r > 0 (at most two consecutive j
/// contribute at any radius).
class DyadicPartition {
  public:
    static DyadicPartition build(const FrequencyGrid& grid);

    /// Variant with the bump support widened by `widen` (> 1 breaks the
    /// partition of unity). Used only for fault injection in the
    /// verification harness.
    static DyadicPartition build_widened(const FrequencyGrid& grid, double widen);

    double profile(double r) const;                       // phi
    double block_multiplier(int j, double r) const;       // phi_j
    double lowpass_multiplier(int j, double r) const;     // psi_j = sum_{k<=j-1} phi_k

    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }

    double support_lower() const { return lo_; }
    double support_upper() const { return hi_; }

  private:
    DyadicPartition(int j_min, int j_max, double lo, double hi)
        : j_min_(j_min), j_max_(j_max), lo_(lo), hi_(hi) {}

    double chi(double r) const;
    double chi_dyadic_sum(double r) const;

    int j_min_;
    int j_max_;
    double lo_;
    double hi_;
};

/// Delta_j: per-mode multiplication by phi_j(|xi|). j outside the partition
/// range yields the zero field.
SpectralField block_project(int j, const SpectralField& f, const DyadicPartition& part);
SpectralVectorField block_project(int j, const SpectralVectorField& f,
                                  const DyadicPartition& part);

/// S_j: per-mode multiplication by psi_j(|xi|).
SpectralField low_pass(int j, const SpectralField& f, const DyadicPartition& part);
SpectralVectorField low_pass(int j, const SpectralVectorField& f,
                             const DyadicPartition& part);

/// The three paraproduct parts of fg = T_f g + T_g f + R(f, g).
struct BonyDecomposition {
    SpectralField low_high;  // T_f g = sum_j S_{j-1} f Delta_j g
    SpectralField high_low;  // T_g f
    SpectralField resonant;  // R(f, g) = sum_j Delta_j f Delta~_j g
};

/// Inputs must be band-limited to the dealias cube; throws otherwise.
/// Every product is dealias-truncated, so the parts sum to the dealiased
/// pseudo-spectral product of f and g.
BonyDecomposition bony_decompose(const SpectralField& f, const SpectralField& g,
                                 const DyadicPartition& part,
                                 const FourierTransform& transform);

/// Lattice L^p norm on the Fourier side: (sum |.|^p cell_volume)^{1/p},
/// max over the lattice for p = infinity.
double lp_lattice_norm(const SpectralField& f, double p);
double lp_lattice_norm(const SpectralVectorField& f, double p);

/// Fourier-Besov norm FB^s_{p,q} by lattice quadrature over dyadic blocks.
/// Vector fields enter through the pointwise Euclidean magnitude.
double fb_norm(const SpectralField& f, const FourierBesovParams& params,
               const DyadicPartition& part);
double fb_norm(const SpectralVectorField& f, const FourierBesovParams& params,
               const DyadicPartition& part);

}  // namespace rotns
