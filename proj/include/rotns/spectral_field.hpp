#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "rotns/grid.hpp"
#include "rotns/math3.hpp"

namespace rotns {

using Complex = std::complex<double>;

/// Scalar complex-valued field on the frequency lattice. The zero mode is
/// pinned to 0 (mean-free fields; every kernel symbol is singular there).
class SpectralField {
  public:
    explicit SpectralField(const FrequencyGrid& grid)
        : grid_(grid), data_(grid.size(), Complex(0.0, 0.0)) {}

    const FrequencyGrid& grid() const { return grid_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator[](std::size_t f) { return data_[f]; }
    const Complex& operator[](std::size_t f) const { return data_[f]; }

    Complex& at(int i, int j, int k) { return data_[grid_.flat_index(i, j, k)]; }
    const Complex& at(int i, int j, int k) const {
        return data_[grid_.flat_index(i, j, k)];
    }

    std::vector<Complex>& data() { return data_; }
    const std::vector<Complex>& data() const { return data_; }

    void pin_zero_mode() { data_[0] = Complex(0.0, 0.0); }

    void fill_zero() { std::fill(data_.begin(), data_.end(), Complex(0.0, 0.0)); }

    SpectralField& operator+=(const SpectralField& o) {
        check_same_grid(o);
        for (std::size_t f = 0; f < data_.size(); ++f) data_[f] += o.data_[f];
        return *this;
    }

    SpectralField& operator-=(const SpectralField& o) {
        check_same_grid(o);
        for (std::size_t f = 0; f < data_.size(); ++f) data_[f] -= o.data_[f];
        return *this;
    }

    SpectralField& operator*=(double s) {
        for (auto& c : data_) c *= s;
        return *this;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& c : data_) m = std::max(m, std::abs(c));
        return m;
    }

    void check_same_grid(const SpectralField& o) const {
        if (!(grid_ == o.grid_))
            throw std::invalid_argument("SpectralField: grid mismatch");
    }

  private:
    FrequencyGrid grid_;
    std::vector<Complex> data_;
};

inline SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
inline SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
inline SpectralField operator*(double s, SpectralField a) { return a *= s; }

/// Three-component complex field on the frequency lattice; houses the
/// spectral velocity and force unknowns.
class SpectralVectorField {
  public:
    explicit SpectralVectorField(const FrequencyGrid& grid)
        : grid_(grid),
          comps_{SpectralField(grid), SpectralField(grid), SpectralField(grid)} {}

    const FrequencyGrid& grid() const { return grid_; }
    std::size_t size() const { return grid_.size(); }

    SpectralField& component(int c) { return comps_[c]; }
    const SpectralField& component(int c) const { return comps_[c]; }

    CVec3 mode(std::size_t f) const {
        return {comps_[0][f], comps_[1][f], comps_[2][f]};
    }

    void set_mode(std::size_t f, const CVec3& v) {
        comps_[0][f] = v[0];
        comps_[1][f] = v[1];
        comps_[2][f] = v[2];
    }

    void pin_zero_mode() {
        for (auto& c : comps_) c.pin_zero_mode();
    }

    void fill_zero() {
        for (auto& c : comps_) c.fill_zero();
    }

    SpectralVectorField& operator+=(const SpectralVectorField& o) {
        for (int c = 0; c < 3; ++c) comps_[c] += o.comps_[c];
        return *this;
    }

    SpectralVectorField& operator-=(const SpectralVectorField& o) {
        for (int c = 0; c < 3; ++c) comps_[c] -= o.comps_[c];
        return *this;
    }

    SpectralVectorField& operator*=(double s) {
        for (auto& c : comps_) c *= s;
        return *this;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& c : comps_) m = std::max(m, c.max_abs());
        return m;
    }

    /// max_xi |xi . u(xi)|, the lattice divergence diagnostic.
    double max_divergence() const {
        double m = 0;
        for (std::size_t f = 0; f < size(); ++f) {
            Vec3 xi = grid_.wavevector(f);
            m = std::max(m, std::abs(dot(xi, mode(f))));
        }
        return m;
    }

    /// max |c(-xi) - conj(c(xi))| over modes and components; 0 for fields
    /// representing real physical data.
    double hermitian_asymmetry() const {
        double m = 0;
        for (std::size_t f = 0; f < size(); ++f) {
            std::size_t g = grid_.conjugate_index(f);
            for (int c = 0; c < 3; ++c)
                m = std::max(m, std::abs(comps_[c][g] - std::conj(comps_[c][f])));
        }
        return m;
    }

  private:
    FrequencyGrid grid_;
    std::array<SpectralField, 3> comps_;
};

inline SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b) {
    return a += b;
}
inline SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b) {
    return a -= b;
}
inline SpectralVectorField operator*(double s, SpectralVectorField a) { return a *= s; }

/// Real scalar samples on the dual periodic lattice.
class PhysicalField {
  public:
    explicit PhysicalField(const FrequencyGrid& grid)
        : grid_(grid), data_(grid.size(), 0.0) {}

    const FrequencyGrid& grid() const { return grid_; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }
    double& operator[](std::size_t f) { return data_[f]; }
    const double& operator[](std::size_t f) const { return data_[f]; }

  private:
    FrequencyGrid grid_;
    std::vector<double> data_;
};

/// Real 3-component samples on the dual periodic lattice.
class PhysicalVectorField {
  public:
    explicit PhysicalVectorField(const FrequencyGrid& grid)
        : grid_(grid),
          comps_{PhysicalField(grid), PhysicalField(grid), PhysicalField(grid)} {}

    const FrequencyGrid& grid() const { return grid_; }
    PhysicalField& component(int c) { return comps_[c]; }
    const PhysicalField& component(int c) const { return comps_[c]; }

  private:
    FrequencyGrid grid_;
    std::array<PhysicalField, 3> comps_;
};

}  // namespace rotns
