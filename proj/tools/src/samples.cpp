#include "ffq/cli/samples.hpp"

#include <cmath>

namespace ffq::cli {

CPowerSeries Sampler::complex_poly(std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    for (auto& a : c) a = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return CPowerSeries(std::move(c));
}

QPowerSeries Sampler::quaternion_poly(std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& a : c) a = quaternion();
    return QPowerSeries(std::move(c));
}

QPowerSeries Sampler::intrinsic_poly(std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& a : c) a = Quaternion{uniform(-1.0, 1.0)};
    return QPowerSeries(std::move(c));
}

Quaternion Sampler::quaternion(double scale) {
    return {scale * uniform(-1.0, 1.0), scale * uniform(-1.0, 1.0), scale * uniform(-1.0, 1.0),
            scale * uniform(-1.0, 1.0)};
}

Quaternion Sampler::unit_imaginary() {
    std::normal_distribution<double> n;
    for (;;) {
        const Quaternion v{0.0, n(rng_), n(rng_), n(rng_)};
        const double len = v.vector_norm();
        if (len > 1e-3) return v / len;
    }
}

SliceFrame Sampler::frame() {
    for (;;) {
        const Quaternion i = unit_imaginary();
        const Quaternion j = unit_imaginary();
        if (std::abs(dot(i, j)) < 0.95) return SliceFrame::orthonormalize(i, j);
    }
}

Complex Sampler::slit_point(double rmin, double rmax, double max_arg) {
    return std::polar(uniform(rmin, rmax), uniform(-max_arg, max_arg));
}

Quaternion Sampler::ball_point(double rmin, double rmax) {
    const Quaternion axis = unit_imaginary();
    const Complex z = slit_point(rmin, rmax);
    return Quaternion{z.real()} + axis * z.imag();
}

}  // namespace ffq::cli
