#pragma once

#include "rotns/math3.hpp"
#include "rotns/spectral_field.hpp"

namespace rotns {

/// Rotation/viscosity parameters of the Stokes-Coriolis system. omega is
/// twice the angular velocity about e3 and may be zero or negative; the
/// reference setting nu = 1 matches the normalization used throughout.
struct CoriolisParams {
    double omega = 0.0;
    double nu = 1.0;

    void validate() const;
};

/// The antisymmetric symbol
///   R(xi) = [  0       xi3/|xi|  -xi2/|xi| ;
///            -xi3/|xi|    0       xi1/|xi| ;
///             xi2/|xi| -xi1/|xi|     0     ],
/// satisfying R(xi) xi = 0 and R(xi) v = v x (xi/|xi|).
Mat3 rotation_matrix(const Vec3& xi);

/// Stokes-Coriolis semigroup symbol
///   G(t) = cos(a t) e^{-nu |xi|^2 t} I + sin(a t) e^{-nu |xi|^2 t} R(xi),
/// with a = Omega xi3 / |xi|. (The time factor multiplies the sine
/// argument as well; the closed-form time integrals below depend on it.)
Mat3 semigroup_symbol(double t, const Vec3& xi, const CoriolisParams& params);

/// Exact time integral of the semigroup symbol over (0, infinity):
///   nu |xi|^4 / (nu^2 |xi|^6 + Omega^2 xi3^2) I
///   + Omega xi3 |xi| / (nu^2 |xi|^6 + Omega^2 xi3^2) R(xi).
/// At nu = 1 the denominators reduce to |xi|^6 + Omega^2 xi3^2.
Mat3 stationary_symbol(const Vec3& xi, const CoriolisParams& params);

/// Exact integral of the semigroup symbol over (0, h), from the closed
/// antiderivatives of e^{-at} cos(bt) and e^{-at} sin(bt).
Mat3 duhamel_symbol(double h, const Vec3& xi, const CoriolisParams& params);

/// Per-mode matrix-vector action of the corresponding symbols; the zero
/// mode stays zero.
SpectralVectorField apply_semigroup(double t, const SpectralVectorField& u,
                                    const CoriolisParams& params);
SpectralVectorField apply_stationary_kernel(const SpectralVectorField& f,
                                            const CoriolisParams& params);

/// Adds int_0^h G(s) ds . fhat to accum per mode (exponential-integrator
/// quadrature primitive for the Duhamel integral; f frozen over the step).
void duhamel_step(SpectralVectorField& accum, double h, const SpectralVectorField& f,
                  const CoriolisParams& params);

/// Weights of the force space X^p_{C,Omega}:
///   w1(xi) = nu |xi|^{6-3/p} / (nu^2 |xi|^6 + Omega^2 xi3^2),
///   w2(xi) = Omega |xi3| |xi|^{3-3/p} / (nu^2 |xi|^6 + Omega^2 xi3^2) R(xi).
/// For p = infinity the exponent 3/p is 0. Requires p > 1.
double weight_w1(const Vec3& xi, double p, const CoriolisParams& params);
Mat3 weight_w2(const Vec3& xi, double p, const CoriolisParams& params);

struct XcNormParts {
    double w1_part = 0.0;
    double w2_part = 0.0;
    double total() const { return w1_part + w2_part; }
};

/// ||w1 fhat||_{L^p} and ||w2 fhat||_{L^p} by lattice quadrature (Euclidean
/// magnitude after the matrix action).
XcNormParts xc_norm_parts(const SpectralVectorField& f, double p,
                          const CoriolisParams& params);
double xc_norm(const SpectralVectorField& f, double p, const CoriolisParams& params);

}  // namespace rotns
