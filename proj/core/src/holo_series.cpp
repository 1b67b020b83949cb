#include "ffq/holo_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ffq/errors.hpp"

namespace ffq {

Complex eval(const CPowerSeries& f, Complex z) noexcept {
    Complex acc{};
    const auto& a = f.coeffs();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPowerSeries derivative(const CPowerSeries& f) {
    const auto& a = f.coeffs();
    if (a.size() <= 1) return CPowerSeries{};
    std::vector<Complex> d(a.size() - 1);
    for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
    return CPowerSeries(std::move(d));
}

double principal_arg(Complex z) noexcept {
    const double a = std::atan2(z.imag(), z.real());
    return a == -std::numbers::pi ? std::numbers::pi : a;
}

Complex principal_power_c(Complex z, double alpha) {
    if (z == Complex{}) throw BranchError("principal power undefined at z = 0");
    return std::exp(alpha * Complex{std::log(std::abs(z)), principal_arg(z)});
}

Complex truncated_exp_c(Complex w, Order k) noexcept {
    if (k.is_infinite()) return std::exp(w);
    Complex acc{1.0};
    for (unsigned m = k.value(); m >= 1; --m) acc = 1.0 + w * acc / static_cast<double>(m);
    return acc;
}

bool in_slit_disk(Complex z) noexcept {
    if (!(std::norm(z) < 1.0)) return false;
    return !(z.imag() == 0.0 && z.real() <= 0.0);
}

Complex fractal_measure_c(Complex z, double alpha, Order k) {
    if (!in_slit_disk(z)) throw BranchError("point outside the slit disk D \\ (-1, 0]");
    return truncated_exp_c(principal_power_c(z, alpha), k);
}

Complex fractal_measure_derivative_c(Complex z, double alpha, Order k) {
    if (!in_slit_disk(z)) throw BranchError("point outside the slit disk D \\ (-1, 0]");
    const Order km1 = k.predecessor();
    return alpha * principal_power_c(z, alpha - 1.0) * truncated_exp_c(principal_power_c(z, alpha), km1);
}

double nonvanishing_minimum(double alpha, Order k, int grid) {
    const Order km1 = k.predecessor();
    double lo = std::numeric_limits<double>::infinity();
    for (int a = 0; a < grid; ++a) {
        const double r = (a + 0.5) / grid;
        for (int b = 0; b < grid; ++b) {
            const double theta = -std::numbers::pi + (b + 0.5) * (2.0 * std::numbers::pi / grid);
            const Complex w = std::polar(std::pow(r, alpha), alpha * theta);
            lo = std::min(lo, std::abs(truncated_exp_c(w, km1)));
        }
    }
    return lo;
}

bool nonvanishing_check(double alpha, Order k, NonvanishingOptions options) {
    if (k.is_infinite() || k == Order(1)) return true;
    return nonvanishing_minimum(alpha, k, options.grid) > options.floor;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

std::vector<Rational> truncated_exp_coefficients(unsigned k) {
    if (k > 20) throw DomainError("exact exponential coefficients limited to k <= 20 (64-bit factorials)");
    std::vector<Rational> out;
    std::int64_t fact = 1;
    for (unsigned n = 0; n <= k; ++n) {
        if (n > 0) fact *= n;
        out.push_back({1, fact});
    }
    return out;
}

std::vector<Rational> derivative(std::span<const Rational> coeffs) {
    std::vector<Rational> out;
    for (std::size_t n = 1; n < coeffs.size(); ++n)
        out.push_back(make_rational(static_cast<std::int64_t>(n) * coeffs[n].num, coeffs[n].den));
    return out;
}

}  // namespace ffq
