#include "rotns/coriolis.hpp"

#include <cmath>
#include <stdexcept>

#include "rotns/littlewood_paley.hpp"

namespace rotns {

void CoriolisParams::validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("CoriolisParams: nu must be positive");
    if (!std::isfinite(omega))
        throw std::invalid_argument("CoriolisParams: omega must be finite");
}

Mat3 rotation_matrix(const Vec3& xi) {
    double r = norm(xi);
    if (r == 0.0) throw std::invalid_argument("rotation_matrix: xi must be nonzero");
    Mat3 m;
    m(0, 0) = 0.0;
    m(0, 1) = xi[2] / r;
    m(0, 2) = -xi[1] / r;
    m(1, 0) = -xi[2] / r;
    m(1, 1) = 0.0;
    m(1, 2) = xi[0] / r;
    m(2, 0) = xi[1] / r;
    m(2, 1) = -xi[0] / r;
    m(2, 2) = 0.0;
    return m;
}

Mat3 semigroup_symbol(double t, const Vec3& xi, const CoriolisParams& params) {
    if (t < 0.0) throw std::invalid_argument("semigroup_symbol: t must be nonnegative");
    params.validate();
    double r = norm(xi);
    if (r == 0.0) throw std::invalid_argument("semigroup_symbol: xi must be nonzero");
    double decay = std::exp(-params.nu * r * r * t);
    double phase = params.omega * xi[2] / r * t;
    Mat3 g = std::cos(phase) * decay * Mat3::identity();
    g += std::sin(phase) * decay * rotation_matrix(xi);
    return g;
}

Mat3 stationary_symbol(const Vec3& xi, const CoriolisParams& params) {
    params.validate();
    double r = norm(xi);
    if (r == 0.0) throw std::invalid_argument("stationary_symbol: xi must be nonzero");
    double r2 = r * r;
    double r6 = r2 * r2 * r2;
    double denom = params.nu * params.nu * r6 + params.omega * params.omega * xi[2] * xi[2];
    Mat3 g = (params.nu * r2 * r2 / denom) * Mat3::identity();
    g += (params.omega * xi[2] * r / denom) * rotation_matrix(xi);
    return g;
}

Mat3 duhamel_symbol(double h, const Vec3& xi, const CoriolisParams& params) {
    if (!(h > 0.0)) throw std::invalid_argument("duhamel_symbol: h must be positive");
    params.validate();
    double r = norm(xi);
    if (r == 0.0) throw std::invalid_argument("duhamel_symbol: xi must be nonzero");
    double a = params.nu * r * r;
    double b = params.omega * xi[2] / r;
    double d = a * a + b * b;
    double e = std::exp(-a * h);
    double c = std::cos(b * h);
    double s = std::sin(b * h);
    double int_cos = (a - e * (a * c - b * s)) / d;
    double int_sin = (b - e * (b * c + a * s)) / d;
    Mat3 g = int_cos * Mat3::identity();
    g += int_sin * rotation_matrix(xi);
    return g;
}

namespace {

template <typename SymbolAt>
SpectralVectorField apply_symbol(const SpectralVectorField& u, SymbolAt symbol_at) {
    SpectralVectorField out(u.grid());
    for (std::size_t f = 1; f < u.size(); ++f) {
        Vec3 xi = u.grid().wavevector(f);
        out.set_mode(f, symbol_at(xi) * u.mode(f));
    }
    out.pin_zero_mode();
    return out;
}

}  // namespace

SpectralVectorField apply_semigroup(double t, const SpectralVectorField& u,
                                    const CoriolisParams& params) {
    if (t == 0.0) return u;
    return apply_symbol(u, [&](const Vec3& xi) { return semigroup_symbol(t, xi, params); });
}

SpectralVectorField apply_stationary_kernel(const SpectralVectorField& f,
                                            const CoriolisParams& params) {
    return apply_symbol(f, [&](const Vec3& xi) { return stationary_symbol(xi, params); });
}

void duhamel_step(SpectralVectorField& accum, double h, const SpectralVectorField& f,
                  const CoriolisParams& params) {
    if (!(h > 0.0)) throw std::invalid_argument("duhamel_step: h must be positive");
    for (std::size_t m = 1; m < f.size(); ++m) {
        Vec3 xi = f.grid().wavevector(m);
        CVec3 v = duhamel_symbol(h, xi, params) * f.mode(m);
        CVec3 a = accum.mode(m);
        accum.set_mode(m, {a[0] + v[0], a[1] + v[1], a[2] + v[2]});
    }
    accum.pin_zero_mode();
}

namespace {

double radial_power(double r, double p) {
    // |xi|^{-3/p}; for p = infinity the exponent is 0
    if (p == kInf) return 1.0;
    return std::pow(r, -3.0 / p);
}

void check_weight_args(double r, double p) {
    if (r == 0.0) throw std::invalid_argument("weights: xi must be nonzero");
    if (!(p > 1.0)) throw std::invalid_argument("weights: p must lie in (1, inf]");
}

}  // namespace

double weight_w1(const Vec3& xi, double p, const CoriolisParams& params) {
    params.validate();
    double r = norm(xi);
    check_weight_args(r, p);
    double r6 = std::pow(r, 6.0);
    double denom = params.nu * params.nu * r6 + params.omega * params.omega * xi[2] * xi[2];
    return params.nu * r6 * radial_power(r, p) / denom;
}

Mat3 weight_w2(const Vec3& xi, double p, const CoriolisParams& params) {
    params.validate();
    double r = norm(xi);
    check_weight_args(r, p);
    double r6 = std::pow(r, 6.0);
    double denom = params.nu * params.nu * r6 + params.omega * params.omega * xi[2] * xi[2];
    double coeff = params.omega * std::abs(xi[2]) * r * r * r * radial_power(r, p) / denom;
    return coeff * rotation_matrix(xi);
}

XcNormParts xc_norm_parts(const SpectralVectorField& f, double p,
                          const CoriolisParams& params) {
    params.validate();
    if (!(p > 1.0)) throw std::invalid_argument("xc_norm: p must lie in (1, inf]");
    const FrequencyGrid& g = f.grid();
    const double vol = g.cell_volume();
    double acc1 = 0.0, acc2 = 0.0;
    for (std::size_t m = 1; m < f.size(); ++m) {
        Vec3 xi = g.wavevector(m);
        CVec3 v = f.mode(m);
        double a1 = weight_w1(xi, p, params) * abs(v);
        double a2 = abs(weight_w2(xi, p, params) * v);
        if (!std::isfinite(a1) || !std::isfinite(a2))
            throw std::invalid_argument("xc_norm: non-finite amplitude");
        if (p == kInf) {
            acc1 = std::max(acc1, a1);
            acc2 = std::max(acc2, a2);
        } else {
            acc1 += std::pow(a1, p) * vol;
            acc2 += std::pow(a2, p) * vol;
        }
    }
    XcNormParts parts;
    parts.w1_part = p == kInf ? acc1 : std::pow(acc1, 1.0 / p);
    parts.w2_part = p == kInf ? acc2 : std::pow(acc2, 1.0 / p);
    return parts;
}

double xc_norm(const SpectralVectorField& f, double p, const CoriolisParams& params) {
    return xc_norm_parts(f, p, params).total();
}

}  // namespace rotns
