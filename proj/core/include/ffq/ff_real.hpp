#pragma once

#include <functional>
#include <optional>

#include "ffq/order.hpp"

namespace ffq {

/// Bundle of fractal-fractional parameters shared by the real, complex and quaternionic operators.
struct FFParams {
    double alpha = 1.0;  ///< fractal order, (0, 1]
    double beta = 1.0;   ///< power applied to f, [0, 1]
    double sigma = 0.5;  ///< proportional blend, [0, 1]
    Order k{1};          ///< truncation order of e_k

    /// Throws DomainError unless alpha in (0,1], beta in [0,1], sigma in [0,1].
    void validate() const;
};

/// Real-line function with an optional analytic derivative.
struct RealFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;  ///< may be empty

    double operator()(double t) const { return value(t); }
};

/// nu(eta, t) and its order eta.
struct FractalMeasure {
    std::function<double(double, double)> nu;
    double eta = 1.0;

    double operator()(double t) const { return nu(eta, t); }

    /// nu(eta, t) = t.
    static FractalMeasure identity();
    /// nu(eta, t) = t^eta.
    static FractalMeasure hausdorff(double eta);
    /// nu(t) = e_k(t^alpha).
    static FractalMeasure truncated_exp(double alpha, Order k);
};

/// chi_0, chi_1 weights of the proportional derivative.
struct ProportionalWeights {
    std::function<double(double, double)> chi0;
    std::function<double(double, double)> chi1;
    double sigma = 0.0;

    /// chi_1 = 1 - sigma, chi_0 = sigma.
    static ProportionalWeights convex(double sigma);
};

/// Checks the endpoint limits chi1 -> 1, chi0 -> 0 as sigma -> 0+ and the reverse as sigma -> 1-,
/// sampled at sigma = 1e-6 and 1 - 1e-6.
bool weights_have_endpoint_limits(const ProportionalWeights& w, double t, double tol = 1e-4);

/// Value with a Richardson error estimate.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

inline constexpr double kDefaultStep = 1e-5;

/// Central difference f'(t) with one Richardson level.
Estimate central_derivative(const std::function<double(double)>& f, double t, double h = kDefaultStep);

/// Stieltjes quotient (f(t+h) - f(t-h)) / (nu(t+h) - nu(t-h)), Richardson refined.
/// Throws DegenerateMeasure when the measure increment is below a floor.
Estimate fractal_derivative(const RealFunction& f, const FractalMeasure& m, double t, double h = kDefaultStep);

/// Quotient of f^beta against nu. Throws DomainError when f <= 0 near t and beta < 1.
Estimate beta_fractal_derivative(const RealFunction& f, const FractalMeasure& m, double beta, double t,
                                 double h = kDefaultStep);

/// chi_1 f + chi_0 f'.
double proportional_derivative(const RealFunction& f, const ProportionalWeights& w, double t,
                               double h = kDefaultStep);

enum class RealEvaluation {
    closed_form,     ///< chi_1 f + chi_0 beta f^(beta-1) f' / (alpha t^(alpha-1) e_{k-1}(t^alpha))
    limit_quotient,  ///< chi_1 f + chi_0 times the beta-fractal quotient against e_k(t^alpha)
};

/// beta-fractal-fractional derivative with respect to e_k(t^alpha). Weights default to the convex pair.
double ff_derivative_real(const RealFunction& f, const FFParams& p, double t, double h = kDefaultStep,
                          RealEvaluation mode = RealEvaluation::closed_form,
                          const std::optional<ProportionalWeights>& weights = std::nullopt);

/// sigma = alpha^2 family: (1 - alpha^2) f + alpha t^(1-alpha) (f^beta)' / e_{k-1}(t^alpha),
/// alpha in [0, 1] (alpha = 0 allowed), k in {1, inf}.
double ff_family_sigma_alpha2(const RealFunction& f, double alpha, Order k, double beta, double t,
                              double h = kDefaultStep);

/// e_k(x) for real x.
double truncated_exp_real(double x, Order k) noexcept;

}  // namespace ffq
