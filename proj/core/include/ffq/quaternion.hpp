#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "ffq/order.hpp"

namespace ffq {

/// q = w + x e1 + y e2 + z e3 with e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0) noexcept
        : w(w_), x(x_), y(y_), z(z_) {}

    constexpr double real() const noexcept { return w; }
    constexpr Quaternion vector() const noexcept { return {0.0, x, y, z}; }
    constexpr Quaternion conj() const noexcept { return {w, -x, -y, -z}; }
    constexpr double norm_sq() const noexcept { return w * w + x * x + y * y + z * z; }
    double norm() const noexcept { return std::sqrt(norm_sq()); }
    double vector_norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }
    constexpr bool is_real() const noexcept { return x == 0.0 && y == 0.0 && z == 0.0; }

    constexpr std::array<double, 4> components() const noexcept { return {w, x, y, z}; }

    constexpr Quaternion operator-() const noexcept { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) noexcept {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) noexcept {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) noexcept { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) noexcept { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) noexcept { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) noexcept { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) noexcept { return a /= s; }

    /// Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) noexcept {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

namespace units {
inline constexpr Quaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion e1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion e2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion e3{0.0, 0.0, 0.0, 1.0};
}  // namespace units

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) noexcept { return a * b; }

/// Euclidean inner product on R^4; Re(a conj(b)).
constexpr double dot(const Quaternion& a, const Quaternion& b) noexcept {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Largest componentwise absolute difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b) noexcept;

/// Throws DomainError on q = 0.
Quaternion inverse(const Quaternion& q);

/// q = x + y*axis = mod * exp(axis * arg) with y >= 0 and arg in (-pi, pi].
struct SlicePolar {
    double x = 0.0;
    double y = 0.0;
    Quaternion axis = units::e1;
    double arg = 0.0;
    double mod = 0.0;

    Quaternion reconstruct() const noexcept { return Quaternion{x} + axis * y; }
    std::complex<double> as_complex() const noexcept { return {x, y}; }
};

/// Real points get axis e1.
SlicePolar slice_decompose(const Quaternion& q) noexcept;

/// exp(beta (ln|q| + I_q Arg q)). Throws BranchError for real q <= 0.
Quaternion principal_power(const Quaternion& q, double beta);

Quaternion exp(const Quaternion& q) noexcept;

/// e_k(q) = sum_{n<=k} q^n / n!; k = inf is the exponential.
Quaternion truncated_exp(const Quaternion& q, Order k) noexcept;

/// Ordered orthonormal pair (i, j) of unit imaginary quaternions.
///
/// Every quaternion splits uniquely as a = (a0 + a1 i) + (a2 + a3 i) j with real
/// a0..a3, i.e. a = c1 + c2 j for c1, c2 in C(i).
class SliceFrame {
public:
    /// Throws FrameError unless i, j are unit, purely imaginary and orthogonal (tol 1e-12).
    static SliceFrame make(const Quaternion& i, const Quaternion& j);

    /// Builds an orthonormal frame from any non-real i and a j not parallel to it,
    /// normalising i and Gram-Schmidt correcting j.
    static SliceFrame orthonormalize(const Quaternion& i, const Quaternion& j);

    static SliceFrame standard() noexcept { return SliceFrame(units::e1, units::e2); }

    const Quaternion& i() const noexcept { return i_; }
    const Quaternion& j() const noexcept { return j_; }
    Quaternion ij() const noexcept { return i_ * j_; }

    /// x + y i.
    Quaternion embed(std::complex<double> c) const noexcept { return Quaternion{c.real()} + i_ * c.imag(); }

    /// Coordinate of a quaternion lying in C(i); components off the slice are dropped.
    std::complex<double> project(const Quaternion& q) const noexcept { return {q.w, dot(q, i_)}; }

    /// a = c1 + c2 j.
    std::pair<std::complex<double>, std::complex<double>> split(const Quaternion& a) const noexcept;

    Quaternion compose(std::complex<double> c1, std::complex<double> c2) const noexcept {
        return embed(c1) + embed(c2) * j_;
    }

private:
    SliceFrame(const Quaternion& i, const Quaternion& j) noexcept : i_(i), j_(j) {}

    Quaternion i_;
    Quaternion j_;
};

}  // namespace ffq
