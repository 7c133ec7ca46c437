#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "rotns/math3.hpp"

namespace rotns {

/// Truncated integer lattice approximating frequency space R^3.
///
/// Wavevector components are k/L for signed integers k in [-n/2, n/2),
/// so the frequency spacing is 1/L per axis and Fourier-side integrals
/// become Riemann sums with weight cell_volume() = L^-3. The dual
/// physical lattice is the periodic box of side 2*pi*L sampled at n
/// points per axis.
class FrequencyGrid {
  public:
    FrequencyGrid(int n_per_axis, double domain_scale)
        : n_(n_per_axis), L_(domain_scale) {
        if (n_ < 4 || n_ % 2 != 0)
            throw std::invalid_argument("FrequencyGrid: n_per_axis must be even and >= 4");
        if (!(L_ > 0.0))
            throw std::invalid_argument("FrequencyGrid: domain_scale must be positive");
    }

    int n_per_axis() const { return n_; }
    double domain_scale() const { return L_; }
    double cell_volume() const { return 1.0 / (L_ * L_ * L_); }
    std::size_t size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }

    /// Signed frequency integer for a storage index in [0, n).
    int signed_component(int i) const { return i < n_ / 2 ? i : i - n_; }

    std::size_t flat_index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    std::array<int, 3> unflatten(std::size_t f) const {
        int k = static_cast<int>(f % n_);
        f /= n_;
        int j = static_cast<int>(f % n_);
        int i = static_cast<int>(f / n_);
        return {i, j, k};
    }

    Vec3 wavevector(int i, int j, int k) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_)
            throw std::out_of_range("FrequencyGrid::wavevector: index out of range");
        return {signed_component(i) / L_, signed_component(j) / L_,
                signed_component(k) / L_};
    }

    Vec3 wavevector(std::size_t flat) const {
        auto [i, j, k] = unflatten(flat);
        return wavevector(i, j, k);
    }

    /// Index of the Hermitian partner mode -xi (mod n per axis).
    std::size_t conjugate_index(std::size_t flat) const {
        auto [i, j, k] = unflatten(flat);
        return flat_index((n_ - i) % n_, (n_ - j) % n_, (n_ - k) % n_);
    }

    /// Largest signed component magnitude kept by the 2/3 dealiasing rule.
    /// Chosen as the largest K with n - 2K > K, so that aliases of products
    /// of retained modes land entirely outside the retained set.
    int dealias_limit() const { return (n_ + 2) / 3 - 1; }

    bool in_dealias_range(int i, int j, int k) const {
        int K = dealias_limit();
        return std::abs(signed_component(i)) <= K &&
               std::abs(signed_component(j)) <= K &&
               std::abs(signed_component(k)) <= K;
    }

    double min_nonzero_radius() const { return 1.0 / L_; }
    double max_radius() const {
        double h = (n_ / 2) / L_;
        return std::sqrt(3.0) * h;
    }

    bool operator==(const FrequencyGrid& o) const {
        return n_ == o.n_ && L_ == o.L_;
    }

  private:
    int n_;
    double L_;
};

}  // namespace rotns
