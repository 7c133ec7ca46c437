#include "rotns/operators.hpp"

namespace rotns {

void leray_project_in_place(SpectralVectorField& u) {
    const FrequencyGrid& g = u.grid();
    for (std::size_t f = 1; f < u.size(); ++f) {
        Vec3 xi = g.wavevector(f);
        double k2 = norm2(xi);
        CVec3 v = u.mode(f);
        Complex proj = dot(xi, v) / k2;
        u.set_mode(f, {v[0] - xi[0] * proj, v[1] - xi[1] * proj, v[2] - xi[2] * proj});
    }
    u.pin_zero_mode();
}

SpectralVectorField leray_project(const SpectralVectorField& u) {
    SpectralVectorField out = u;
    leray_project_in_place(out);
    return out;
}

SpectralVectorField coriolis_term(const SpectralVectorField& u) {
    SpectralVectorField out(u.grid());
    for (std::size_t f = 0; f < u.size(); ++f) {
        CVec3 v = u.mode(f);
        out.set_mode(f, {-v[1], v[0], Complex(0.0, 0.0)});
    }
    out.pin_zero_mode();
    return out;
}

void dealias_in_place(SpectralField& f) {
    const FrequencyGrid& g = f.grid();
    int n = g.n_per_axis();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!g.in_dealias_range(i, j, k)) f.at(i, j, k) = Complex(0.0, 0.0);
}

void dealias_in_place(SpectralVectorField& u) {
    for (int c = 0; c < 3; ++c) dealias_in_place(u.component(c));
}

double energy_beyond_cutoff(const SpectralField& f) {
    const FrequencyGrid& g = f.grid();
    int n = g.n_per_axis();
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!g.in_dealias_range(i, j, k))
                    m = std::max(m, std::abs(f.at(i, j, k)));
    return m;
}

double energy_beyond_cutoff(const SpectralVectorField& u) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c) m = std::max(m, energy_beyond_cutoff(u.component(c)));
    return m;
}

SpectralVectorField nonlinear_term(const SpectralVectorField& u,
                                   const FourierTransform& transform,
                                   NonlinearDiagnostics* diag) {
    const FrequencyGrid& g = u.grid();

    SpectralVectorField ut = u;
    dealias_in_place(ut);
    ut.pin_zero_mode();

    double div = ut.max_divergence();
    double scale = ut.max_abs() * g.max_radius();
    if (diag) {
        diag->input_divergence = div;
        diag->divergence_warning = div > 1e-8 * std::max(scale, 1e-300);
    }

    // physical samples of the three components
    std::array<std::vector<Complex>, 3> phys;
    for (int c = 0; c < 3; ++c) transform.to_physical(ut.component(c).data(), phys[c]);

    const std::size_t count = g.size();
    SpectralVectorField out(g);
    std::vector<Complex> prod(count), prod_hat(count);

    // w_ij = u_i u_j, symmetric: 6 distinct products; contract with i xi_j
    for (int i = 0; i <= 2; ++i) {
        for (int j = i; j <= 2; ++j) {
            for (std::size_t m = 0; m < count; ++m) prod[m] = phys[i][m] * phys[j][m];
            transform.to_spectral(prod, prod_hat);
            for (std::size_t f = 0; f < count; ++f) {
                Vec3 xi = g.wavevector(f);
                Complex w = prod_hat[f];
                out.component(i)[f] += Complex(0.0, 1.0) * xi[j] * w;
                if (i != j) out.component(j)[f] += Complex(0.0, 1.0) * xi[i] * w;
            }
        }
    }

    dealias_in_place(out);
    out.pin_zero_mode();
    return out;
}

SpectralField multiply(const SpectralField& f, const SpectralField& g,
                       const FourierTransform& transform, bool dealias) {
    f.check_same_grid(g);
    std::vector<Complex> pf, pg;
    transform.to_physical(f.data(), pf);
    transform.to_physical(g.data(), pg);
    for (std::size_t m = 0; m < pf.size(); ++m) pf[m] *= pg[m];
    SpectralField out(f.grid());
    transform.to_spectral(pf, out.data());
    if (dealias) dealias_in_place(out);
    return out;
}

}  // namespace rotns
