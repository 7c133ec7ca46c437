#include "rotns/transform.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace rotns {

struct FourierTransform::Impl {
    fftw_complex* buf = nullptr;
    fftw_plan plan_fwd = nullptr;  // FFTW_FORWARD,  e^{-i...}
    fftw_plan plan_bwd = nullptr;  // FFTW_BACKWARD, e^{+i...}
    std::size_t count = 0;

    explicit Impl(int n) {
        count = static_cast<std::size_t>(n) * n * n;
        buf = fftw_alloc_complex(count);
        if (!buf) throw std::bad_alloc();
        plan_fwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_bwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!plan_fwd || !plan_bwd)
            throw std::runtime_error("FourierTransform: FFTW plan creation failed");
    }

    ~Impl() {
        if (plan_fwd) fftw_destroy_plan(plan_fwd);
        if (plan_bwd) fftw_destroy_plan(plan_bwd);
        if (buf) fftw_free(buf);
    }
};

FourierTransform::FourierTransform(const FrequencyGrid& grid)
    : grid_(grid), impl_(std::make_unique<Impl>(grid.n_per_axis())) {}

FourierTransform::~FourierTransform() = default;

void FourierTransform::to_physical(const std::vector<Complex>& spec,
                                   std::vector<Complex>& phys) const {
    if (spec.size() != impl_->count)
        throw std::invalid_argument("FourierTransform::to_physical: size mismatch");
    std::memcpy(impl_->buf, spec.data(), impl_->count * sizeof(fftw_complex));
    fftw_execute(impl_->plan_bwd);
    phys.resize(impl_->count);
    std::memcpy(phys.data(), impl_->buf, impl_->count * sizeof(fftw_complex));
}

void FourierTransform::to_spectral(const std::vector<Complex>& phys,
                                   std::vector<Complex>& spec) const {
    if (phys.size() != impl_->count)
        throw std::invalid_argument("FourierTransform::to_spectral: size mismatch");
    std::memcpy(impl_->buf, phys.data(), impl_->count * sizeof(fftw_complex));
    fftw_execute(impl_->plan_fwd);
    spec.resize(impl_->count);
    const double scale = 1.0 / static_cast<double>(impl_->count);
    for (std::size_t f = 0; f < impl_->count; ++f)
        spec[f] = Complex(impl_->buf[f][0] * scale, impl_->buf[f][1] * scale);
}

SpectralField FourierTransform::forward(const PhysicalField& f) const {
    std::vector<Complex> phys(impl_->count);
    for (std::size_t m = 0; m < impl_->count; ++m) phys[m] = Complex(f[m], 0.0);
    SpectralField out(grid_);
    to_spectral(phys, out.data());
    return out;
}

SpectralVectorField FourierTransform::forward(const PhysicalVectorField& f) const {
    SpectralVectorField out(grid_);
    for (int c = 0; c < 3; ++c)
        out.component(c) = forward(f.component(c));
    return out;
}

PhysicalField FourierTransform::inverse(const SpectralField& f) const {
    std::vector<Complex> phys;
    to_physical(f.data(), phys);
    PhysicalField out(grid_);
    for (std::size_t m = 0; m < impl_->count; ++m) out[m] = phys[m].real();
    return out;
}

PhysicalVectorField FourierTransform::inverse(const SpectralVectorField& f) const {
    PhysicalVectorField out(grid_);
    for (int c = 0; c < 3; ++c)
        out.component(c) = inverse(f.component(c));
    return out;
}

}  // namespace rotns
