#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffq/order.hpp"

namespace ffq {

using Complex = std::complex<double>;

/// Polynomial sum_{n<=N} a_n z^n on the unit disk. The empty list is the zero series.
class CPowerSeries {
public:
    CPowerSeries() = default;
    explicit CPowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}
    CPowerSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {}

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }

    /// Truncation degree N (0 for the zero series).
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    /// Coefficient a_n, zero beyond the stored degree.
    Complex operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

    friend bool operator==(const CPowerSeries&, const CPowerSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex eval(const CPowerSeries& f, Complex z) noexcept;

/// Coefficients n a_n shifted down one degree.
CPowerSeries derivative(const CPowerSeries& f);

/// Principal argument in (-pi, pi]; a signed zero imaginary part never yields -pi.
double principal_arg(Complex z) noexcept;

/// exp(alpha (ln|z| + i Arg z)). Throws BranchError at z = 0.
Complex principal_power_c(Complex z, double alpha);

/// e_k(w) = sum_{n<=k} w^n / n!, exp(w) for k = inf.
Complex truncated_exp_c(Complex w, Order k) noexcept;

/// |z| < 1 and z not on (-1, 0].
bool in_slit_disk(Complex z) noexcept;

struct SlitDiskPoint {
    Complex z;
    bool valid;

    static SlitDiskPoint make(Complex z) noexcept { return {z, in_slit_disk(z)}; }
};

/// e_k(z^alpha) on the slit disk. Throws BranchError off the domain.
Complex fractal_measure_c(Complex z, double alpha, Order k);

/// d/dz e_k(z^alpha) = alpha z^(alpha-1) e_{k-1}(z^alpha). Throws BranchError off the slit disk
/// and DomainError for k = 0.
Complex fractal_measure_derivative_c(Complex z, double alpha, Order k);

struct NonvanishingOptions {
    int grid = 400;
    double floor = 1e-8;
};

/// Screens e_{k-1}(z^alpha) != 0 on a polar grid of the slit disk. k = 1 and k = inf are
/// decided without scanning.
bool nonvanishing_check(double alpha, Order k, NonvanishingOptions options = {});

/// Smallest |e_{k-1}(z^alpha)| seen by the polar scan.
double nonvanishing_minimum(double alpha, Order k, int grid);

/// Exact rational coefficient p/q.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Coefficients 1/n! of e_k for k <= 20.
std::vector<Rational> truncated_exp_coefficients(unsigned k);

/// Formal derivative on exact coefficients.
std::vector<Rational> derivative(std::span<const Rational> coeffs);

}  // namespace ffq
