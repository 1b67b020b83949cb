#include "ffq/ff_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ffq/errors.hpp"

namespace ffq {

void FFParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1], got " + std::to_string(beta));
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in [0, 1], got " + std::to_string(sigma));
}

double truncated_exp_real(double x, Order k) noexcept {
    if (k.is_infinite()) return std::exp(x);
    double acc = 1.0;
    for (unsigned m = k.value(); m >= 1; --m) acc = 1.0 + x * acc / m;
    return acc;
}

FractalMeasure FractalMeasure::identity() {
    return {[](double, double t) { return t; }, 1.0};
}

FractalMeasure FractalMeasure::hausdorff(double eta) {
    return {[](double e, double t) { return std::pow(t, e); }, eta};
}

FractalMeasure FractalMeasure::truncated_exp(double alpha, Order k) {
    return {[k](double a, double t) { return truncated_exp_real(std::pow(t, a), k); }, alpha};
}

ProportionalWeights ProportionalWeights::convex(double sigma) {
    return {[](double s, double) { return s; }, [](double s, double) { return 1.0 - s; }, sigma};
}

bool weights_have_endpoint_limits(const ProportionalWeights& w, double t, double tol) {
    constexpr double eps = 1e-6;
    return std::abs(w.chi1(eps, t) - 1.0) <= tol && std::abs(w.chi0(eps, t)) <= tol &&
           std::abs(w.chi1(1.0 - eps, t)) <= tol && std::abs(w.chi0(1.0 - eps, t) - 1.0) <= tol;
}

namespace {

// Richardson on an even-error quotient Q(h) = L + c h^2 + O(h^4).
template <class Quotient>
Estimate richardson(Quotient&& q, double h) {
    const double coarse = q(h);
    const double fine = q(0.5 * h);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    return {extrapolated, std::abs(extrapolated - fine)};
}

void screen_measure(double dnu, double t) {
    const double floor = 1e-300 + 1e-15 * std::max(1.0, std::abs(t));
    if (!(std::abs(dnu) > floor)) throw DegenerateMeasure("fractal measure is not strictly monotone near t");
}

double powered(double v, double beta) {
    if (beta == 1.0) return v;
    if (!(v > 0.0)) throw DomainError("f^beta with beta < 1 requires f > 0");
    return std::pow(v, beta);
}

}  // namespace

Estimate central_derivative(const std::function<double(double)>& f, double t, double h) {
    return richardson([&](double s) { return (f(t + s) - f(t - s)) / (2.0 * s); }, h);
}

Estimate beta_fractal_derivative(const RealFunction& f, const FractalMeasure& m, double beta, double t, double h) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
    return richardson(
        [&](double s) {
            const double dnu = m(t + s) - m(t - s);
            screen_measure(dnu, t);
            return (powered(f(t + s), beta) - powered(f(t - s), beta)) / dnu;
        },
        h);
}

Estimate fractal_derivative(const RealFunction& f, const FractalMeasure& m, double t, double h) {
    return beta_fractal_derivative(f, m, 1.0, t, h);
}

double proportional_derivative(const RealFunction& f, const ProportionalWeights& w, double t, double h) {
    const double df = f.derivative ? f.derivative(t) : central_derivative(f.value, t, h).value;
    return w.chi1(w.sigma, t) * f(t) + w.chi0(w.sigma, t) * df;
}

namespace {

double derivative_of(const RealFunction& f, double t, double h) {
    return f.derivative ? f.derivative(t) : central_derivative(f.value, t, h).value;
}

// (f^beta)'(t) = beta f^(beta-1) f'.
double power_derivative(const RealFunction& f, double beta, double t, double h) {
    if (beta == 0.0) return 0.0;
    const double v = f(t);
    const double df = derivative_of(f, t, h);
    if (beta == 1.0) return df;
    if (!(v > 0.0)) throw DomainError("f^beta with beta < 1 requires f(t) > 0");
    return beta * std::pow(v, beta - 1.0) * df;
}

}  // namespace

double ff_derivative_real(const RealFunction& f, const FFParams& p, double t, double h, RealEvaluation mode,
                          const std::optional<ProportionalWeights>& weights) {
    p.validate();
    if (!(t > 0.0)) throw DomainError("real fractal-fractional derivative requires t > 0");
    if (p.k == Order(0)) throw DomainError("k = 0 gives e_0' = 0; the fractal quotient is undefined");
    if (p.beta < 1.0 && !(f(t) > 0.0)) throw DomainError("f^beta with beta < 1 requires f(t) > 0");
    const ProportionalWeights w = weights ? *weights : ProportionalWeights::convex(p.sigma);
    const double chi1 = w.chi1(w.sigma, t);
    const double chi0 = w.chi0(w.sigma, t);

    double fractal = 0.0;
    if (mode == RealEvaluation::closed_form) {
        const double ta = std::pow(t, p.alpha);
        const double dnu = p.alpha * std::pow(t, p.alpha - 1.0) * truncated_exp_real(ta, p.k.predecessor());
        if (dnu == 0.0) throw DomainError("e_{k-1}(t^alpha) vanishes");
        fractal = power_derivative(f, p.beta, t, h) / dnu;
    } else {
        fractal = beta_fractal_derivative(f, FractalMeasure::truncated_exp(p.alpha, p.k), p.beta, t, h).value;
    }
    return chi1 * f(t) + chi0 * fractal;
}

double ff_family_sigma_alpha2(const RealFunction& f, double alpha, Order k, double beta, double t, double h) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
    if (!(k == Order(1) || k.is_infinite())) throw DomainError("sigma = alpha^2 closed forms cover k = 1 and k = inf");
    if (t < 0.0) throw DomainError("sigma = alpha^2 family requires t >= 0");
    const double base = (1.0 - alpha * alpha) * f(t);
    if (alpha == 0.0) return base;
    const double weight = alpha * std::pow(t, 1.0 - alpha) / truncated_exp_real(std::pow(t, alpha), k.predecessor());
    return base + weight * power_derivative(f, beta, t, h);
}

}  // namespace ffq
