#include "rotns/random_fields.hpp"

#include <cmath>

#include "rotns/operators.hpp"

namespace rotns {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

void hermitian_symmetrize(SpectralField& f) {
    const FrequencyGrid& g = f.grid();
    for (std::size_t m = 0; m < g.size(); ++m) {
        std::size_t c = g.conjugate_index(m);
        if (c < m) continue;
        if (c == m) {
            f[m] = Complex(f[m].real(), 0.0);
        } else {
            Complex avg = 0.5 * (f[m] + std::conj(f[c]));
            f[m] = avg;
            f[c] = std::conj(avg);
        }
    }
    f.pin_zero_mode();
}

void hermitian_symmetrize(SpectralVectorField& f) {
    for (int c = 0; c < 3; ++c) hermitian_symmetrize(f.component(c));
}

namespace {

template <typename Fill>
void fill_masked(const FrequencyGrid& g, Fill fill) {
    int n = g.n_per_axis();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) fill(i, j, k);
}

bool within_band(const FrequencyGrid& g, int i, int j, int k, int max_wavenumber) {
    return std::abs(g.signed_component(i)) <= max_wavenumber &&
           std::abs(g.signed_component(j)) <= max_wavenumber &&
           std::abs(g.signed_component(k)) <= max_wavenumber;
}

}  // namespace

SpectralField random_band_limited_scalar(const FrequencyGrid& grid, int max_wavenumber,
                                         double amplitude, Rng& rng) {
    SpectralField f(grid);
    fill_masked(grid, [&](int i, int j, int k) {
        if (!within_band(grid, i, j, k, max_wavenumber)) return;
        f.at(i, j, k) = amplitude * Complex(rng.normal(), rng.normal());
    });
    hermitian_symmetrize(f);
    return f;
}

SpectralVectorField random_vector_field(const FrequencyGrid& grid, int max_wavenumber,
                                        double amplitude, Rng& rng) {
    SpectralVectorField u(grid);
    for (int c = 0; c < 3; ++c)
        u.component(c) = random_band_limited_scalar(grid, max_wavenumber, amplitude, rng);
    return u;
}

SpectralVectorField random_divergence_free_field(const FrequencyGrid& grid,
                                                 int max_wavenumber, double amplitude,
                                                 Rng& rng) {
    SpectralVectorField u = random_vector_field(grid, max_wavenumber, amplitude, rng);
    leray_project_in_place(u);
    return u;
}

SpectralVectorField annulus_force(const FrequencyGrid& grid, double r_min, double r_max,
                                  double xi3_min, double amplitude, Rng& rng) {
    SpectralVectorField f(grid);
    fill_masked(grid, [&](int i, int j, int k) {
        Vec3 xi = grid.wavevector(i, j, k);
        double r = norm(xi);
        if (r < r_min || r > r_max || std::abs(xi[2]) < xi3_min) return;
        for (int c = 0; c < 3; ++c)
            f.component(c).at(i, j, k) = Complex(rng.normal(), rng.normal());
    });
    hermitian_symmetrize(f);
    double m = f.max_abs();
    if (m > 0.0) f *= amplitude / m;
    return f;
}

SpectralVectorField axis_force(const FrequencyGrid& grid, int k, double amplitude) {
    if (k <= 0 || k >= grid.n_per_axis() / 2)
        throw std::invalid_argument("axis_force: k out of range");
    SpectralVectorField f(grid);
    int n = grid.n_per_axis();
    // horizontal amplitude so that the mode is divergence-free and R acts
    // with full magnitude
    f.component(0).at(0, 0, k) = Complex(0.5 * amplitude, 0.0);
    f.component(0).at(0, 0, n - k) = Complex(0.5 * amplitude, 0.0);
    return f;
}

SpectralVectorField planar_force(const FrequencyGrid& grid, double r_max,
                                 double amplitude, Rng& rng) {
    SpectralVectorField f(grid);
    fill_masked(grid, [&](int i, int j, int k) {
        if (grid.signed_component(k) != 0) return;
        Vec3 xi = grid.wavevector(i, j, k);
        double r = norm(xi);
        if (r == 0.0 || r > r_max) return;
        for (int c = 0; c < 3; ++c)
            f.component(c).at(i, j, k) = Complex(rng.normal(), rng.normal());
    });
    hermitian_symmetrize(f);
    double m = f.max_abs();
    if (m > 0.0) f *= amplitude / m;
    return f;
}

PhysicalVectorField random_physical_field(const FrequencyGrid& grid, double amplitude,
                                          Rng& rng) {
    PhysicalVectorField f(grid);
    for (int c = 0; c < 3; ++c)
        for (std::size_t m = 0; m < grid.size(); ++m)
            f.component(c)[m] = rng.uniform(-amplitude, amplitude);
    return f;
}

}  // namespace rotns
