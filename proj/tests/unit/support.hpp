#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "ffq/slice_regular.hpp"

namespace test {

using ffq::Complex;
using ffq::Quaternion;

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

// Fixed seeds keep the property tests reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    double u(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(g_); }

    Quaternion quat(double scale = 1.0) { return {u() * scale, u() * scale, u() * scale, u() * scale}; }

    Quaternion unit_imag() {
        for (;;) {
            const Quaternion v{0.0, u(), u(), u()};
            const double n = v.norm();
            if (n > 0.1) return v / n;
        }
    }

    Quaternion ball(double rmax = 0.9) {
        for (;;) {
            const Quaternion q = quat();
            const double n = q.norm();
            if (n > 0.05 && n < 1.0) return q * (rmax * u(0.1, 1.0) / n);
        }
    }

    Complex slit(double rmin = 0.1, double rmax = 0.9, double max_arg = 3.0) {
        return std::polar(u(rmin, rmax), u(-max_arg, max_arg));
    }

    ffq::CPowerSeries cpoly(std::size_t degree) {
        std::vector<Complex> c(degree + 1);
        for (auto& a : c) a = {u(), u()};
        return ffq::CPowerSeries(std::move(c));
    }

    ffq::QPowerSeries qpoly(std::size_t degree) {
        std::vector<Quaternion> c(degree + 1);
        for (auto& a : c) a = quat();
        return ffq::QPowerSeries(std::move(c));
    }

    ffq::SliceFrame frame() { return ffq::SliceFrame::orthonormalize(unit_imag(), unit_imag()); }

private:
    std::mt19937_64 g_;
};

}  // namespace test
