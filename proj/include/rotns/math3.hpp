#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace rotns {

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<std::complex<double>, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline std::complex<double> dot(const Vec3& a, const CVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double abs2(const CVec3& v) {
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}

inline double abs(const CVec3& v) { return std::sqrt(abs2(v)); }

/// Dense 3x3 real matrix in row-major order. All kernel symbols in this
/// project are real matrices acting on complex mode amplitudes.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }

    static Mat3 zero() { return Mat3{}; }

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) m[i] += o.m[i];
        return *this;
    }

    Mat3& operator*=(double s) {
        for (double& x : m) x *= s;
        return *this;
    }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (double x : m) s += x * x;
        return std::sqrt(s);
    }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }

inline Mat3 operator*(double s, Mat3 a) { return a *= s; }

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
    return r;
}

inline CVec3 operator*(const Mat3& a, const CVec3& v) {
    CVec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
    return r;
}

}  // namespace rotns
