#pragma once

#include <cstdint>
#include <random>

#include "ffq/holo_series.hpp"
#include "ffq/slice_regular.hpp"

namespace ffq::cli {

/// Deterministic random inputs for the verification suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Coefficients uniform in the square [-1, 1]^2.
    CPowerSeries complex_poly(std::size_t degree);

    /// Coefficients uniform in [-1, 1]^4.
    QPowerSeries quaternion_poly(std::size_t degree);

    /// Real coefficients uniform in [-1, 1].
    QPowerSeries intrinsic_poly(std::size_t degree);

    Quaternion quaternion(double scale = 1.0);
    Quaternion unit_imaginary();
    SliceFrame frame();

    /// Point of the slit disk with r in [rmin, rmax] and |Arg| <= max_arg.
    Complex slit_point(double rmin, double rmax, double max_arg = 3.0);

    /// Point of the open ball off the slit with |q| in [rmin, rmax].
    Quaternion ball_point(double rmin, double rmax);

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ffq::cli
