#include "ffq/ff_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

#include "ffq/errors.hpp"

namespace ffq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_beta_one(const FFParams& p, const char* what) {
    if (p.beta != 1.0) throw DomainError(std::string(what) + " is defined for beta = 1 only");
}

void require_sigma_open(const FFParams& p, const char* what) {
    if (!(p.sigma > 0.0 && p.sigma < 1.0)) throw DomainError(std::string(what) + " requires sigma in (0, 1)");
}

void require_sigma_positive(const FFParams& p, const char* what) {
    if (!(p.sigma > 0.0)) throw DomainError(std::string(what) + " requires sigma in (0, 1]");
}

void require_slit(Complex z) {
    if (!in_slit_disk(z)) throw BranchError("point lies outside the slit disk D \\ (-1, 0]");
}

bool is_constant(const CPowerSeries& f) noexcept {
    for (std::size_t n = 1; n < f.size(); ++n)
        if (f[n] != Complex{}) return false;
    return true;
}

double weight_exponent(const FFParams& p, WeightSign sign) noexcept {
    const double s = (1.0 - p.sigma) / p.sigma;
    return sign == WeightSign::consistent ? s : -s;
}

Complex fractal_term_impl(const CPowerSeries& f, const CPowerSeries& df, const FFParams& p, Complex z) {
    if (p.beta == 0.0) return {};
    const Complex d = fractal_measure_derivative_c(z, p.alpha, p.k);
    const Complex slope = eval(df, z);
    if (p.beta == 1.0) return slope / d;
    const Complex fz = eval(f, z);
    if (fz.imag() == 0.0 && fz.real() <= 0.0)
        throw BranchError("f(z) lies on (-inf, 0]; f^beta has no principal value there");
    return p.beta * principal_power_c(fz, p.beta - 1.0) * slope / d;
}

double point_term(const CPowerSeries& f, const FFParams& p) { return p.alpha * std::norm(eval(f, {0.5, 0.0})); }

}  // namespace

void validate_complex_params(const FFParams& p) {
    p.validate();
    if (p.k == Order(0)) throw DomainError("k = 0 makes e_k(z^alpha) constant; the fractal quotient is undefined");
}

FFEvaluator::FFEvaluator(CPowerSeries f, const FFParams& p) : f_(std::move(f)), df_(derivative(f_)), p_(p) {
    validate_complex_params(p_);
}

Complex FFEvaluator::operator()(Complex z) const {
    require_slit(z);
    Complex out = (1.0 - p_.sigma) * eval(f_, z);
    if (p_.sigma != 0.0) out += p_.sigma * fractal_term_impl(f_, df_, p_, z);
    return out;
}

Complex fractal_term_c(const CPowerSeries& f, const FFParams& p, Complex z) {
    validate_complex_params(p);
    require_slit(z);
    return fractal_term_impl(f, derivative(f), p, z);
}

Complex ff_eval_c(const CPowerSeries& f, const FFParams& p, Complex z) { return FFEvaluator(f, p)(z); }

bool measure_vanishes_on_boundary(const FFParams& p) noexcept { return p.alpha == 1.0 && p.k == Order(2); }

bool in_dirichlet_space(const CPowerSeries& f, const FFParams& p) {
    if (!measure_vanishes_on_boundary(p) || p.sigma == 0.0) return true;
    // D f = (1 - sigma) f + sigma f'(z) / (1 + z): square integrable near z = -1 iff f'(-1) = 0.
    double scale = 0.0;
    for (const auto& a : f.coeffs()) scale = std::max(scale, std::abs(a));
    return std::abs(eval(derivative(f), {-1.0, 0.0})) <= 1e-12 * std::max(1.0, scale);
}

void require_in_dirichlet_space(const CPowerSeries& f, const FFParams& p) {
    if (!in_dirichlet_space(f, p))
        throw NotInSpace("alpha = 1, k = 2: e_1(z) = 1 + z vanishes at z = -1 and f'(-1) != 0, so the "
                         "field integral diverges");
}

std::string to_string(NormMethod m) {
    switch (m) {
        case NormMethod::quadrature: return "quadrature";
        case NormMethod::series: return "series";
        case NormMethod::closed_k1: return "closed-k1";
    }
    return "unknown";
}

DirichletValue dirichlet_norm_quad(const CPowerSeries& f, const FFParams& p, const QuadratureSpec& spec) {
    validate_complex_params(p);
    require_in_dirichlet_space(f, p);
    DirichletValue v;
    v.method = NormMethod::quadrature;
    v.point_term = point_term(f, p);
    if (!f.empty()) {
        const FFEvaluator D(f, p);
        const DiskIntegral field = integrate_disk([&D](Complex z) { return Complex{std::norm(D(z)), 0.0}; }, spec);
        v.field_term = field.value.real();
        v.error = field.error;
    }
    v.norm_sq = v.point_term + v.field_term;
    return v;
}

Complex inner_product_c(const CPowerSeries& f, const CPowerSeries& g, const FFParams& p, const QuadratureSpec& spec) {
    validate_complex_params(p);
    require_beta_one(p, "the inner product");
    require_in_dirichlet_space(f, p);
    require_in_dirichlet_space(g, p);
    const Complex half{0.5, 0.0};
    Complex out = p.alpha * eval(f, half) * std::conj(eval(g, half));
    if (f.empty() || g.empty()) return out;
    const FFEvaluator Df(f, p);
    const FFEvaluator Dg(g, p);
    out += integrate_disk([&](Complex z) { return Df(z) * std::conj(Dg(z)); }, spec).value;
    return out;
}

CoefficientIntegrals coefficient_integrals(const FFParams& p, std::size_t degree, const QuadratureSpec& spec) {
    validate_complex_params(p);
    if (degree >= 1 && measure_vanishes_on_boundary(p))
        throw NotInSpace("alpha = 1, k = 2: the alpha(m, n) integrals diverge at z = -1");
    if (!nonvanishing_check(p.alpha, p.k)) throw DomainError("e_{k-1}(z^alpha) vanishes on the slit disk");

    CoefficientIntegrals ci;
    ci.degree = degree;
    ci.params = p;
    const std::size_t N = degree;
    const std::size_t na = N * N;
    const std::size_t dim = na + N * (N + 1);
    ci.alpha_mn.assign(na, {});
    ci.beta_mn.assign(N * (N + 1), {});
    if (N == 0) return ci;

    const double alpha = p.alpha;
    const Order km1 = p.k.predecessor();
    const PolarIntegrand h = [&](double r, double theta, std::span<Complex> out) {
        const Complex z = std::polar(r, theta);
        const Complex e = truncated_exp_c(std::polar(std::pow(r, alpha), alpha * theta), km1);
        std::vector<Complex> zn(N + 1);
        zn[0] = 1.0;
        for (std::size_t n = 1; n <= N; ++n) zn[n] = zn[n - 1] * z;
        const double ra = std::pow(r, 3.0 - 2.0 * alpha) / std::norm(e);
        const Complex rb = std::pow(r, 2.0 - alpha) * std::polar(1.0, theta * (1.0 - alpha)) / e;
        for (std::size_t m = 0; m < N; ++m) {
            for (std::size_t n = 0; n < N; ++n) out[m * N + n] = ra * zn[n] * std::conj(zn[m]);
            for (std::size_t n = 0; n <= N; ++n) out[na + m * (N + 1) + n] = rb * zn[m] * std::conj(zn[n]);
        }
    };
    MultiIntegral mi = integrate_polar(h, dim, spec);
    std::copy(mi.values.begin(), mi.values.begin() + static_cast<std::ptrdiff_t>(na), ci.alpha_mn.begin());
    std::copy(mi.values.begin() + static_cast<std::ptrdiff_t>(na), mi.values.end(), ci.beta_mn.begin());
    ci.error = mi.max_error();
    return ci;
}

CoefficientIntegrals coefficient_integrals_k1(const FFParams& p, std::size_t degree) {
    validate_complex_params(p);
    if (p.k != Order(1)) throw DomainError("analytic coefficient integrals need k = 1");
    CoefficientIntegrals ci;
    ci.degree = degree;
    ci.params = p;
    const std::size_t N = degree;
    const double a = p.alpha;
    ci.alpha_mn.assign(N * N, {});
    ci.beta_mn.assign(N * (N + 1), {});
    for (std::size_t n = 0; n < N; ++n) ci.alpha_mn[n * N + n] = 2.0 * kPi / (2.0 * n + 4.0 - 2.0 * a);
    for (std::size_t m = 0; m < N; ++m) {
        for (std::size_t n = 0; n <= N; ++n) {
            const double c = static_cast<double>(m) + 1.0 - static_cast<double>(n) - a;
            const double radial = 1.0 / (static_cast<double>(n + m) + 3.0 - a);
            double angular;
            const double cr = std::round(c);
            if (std::abs(c - cr) < 1e-14)
                angular = cr == 0.0 ? 2.0 * kPi : 0.0;
            else
                angular = 2.0 * std::sin(kPi * c) / c;
            ci.beta_mn[m * (N + 1) + n] = angular * radial;
        }
    }
    return ci;
}

NormBreakdown series_breakdown(const CPowerSeries& f, const FFParams& p, const CoefficientIntegrals& ci) {
    NormBreakdown b;
    const std::size_t N = ci.degree;
    const double s = p.sigma;
    const double a = p.alpha;
    b.point = point_term(f, p);
    for (std::size_t n = 0; n < f.size(); ++n) b.bergman += std::norm(f[n]) / static_cast<double>(n + 1);
    b.bergman *= (1.0 - s) * (1.0 - s) * kPi;

    Complex s2{};
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < N; ++m)
            s2 += static_cast<double>((n + 1) * (m + 1)) * f[n + 1] * std::conj(f[m + 1]) * ci.alpha(m, n);
    b.sigma2 = s * s / (a * a) * s2.real();

    double cross = 0.0;
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n <= N; ++n)
            cross += 2.0 * static_cast<double>(m + 1) * (f[m + 1] * std::conj(f[n]) * ci.beta(m, n)).real();
    b.cross = (1.0 - s) * s / a * cross;
    return b;
}

DirichletValue dirichlet_norm_series(const CPowerSeries& f, const FFParams& p, const CoefficientIntegrals& ci) {
    validate_complex_params(p);
    require_beta_one(p, "the series norm");
    if (f.degree() > ci.degree)
        throw DegreeMismatch("polynomial degree " + std::to_string(f.degree()) +
                             " exceeds the coefficient-integral degree " + std::to_string(ci.degree));
    if (ci.params.alpha != p.alpha || ci.params.k != p.k)
        throw DegreeMismatch("coefficient integrals were computed for different alpha or k");
    const NormBreakdown b = series_breakdown(f, p, ci);
    DirichletValue v;
    v.method = NormMethod::series;
    v.point_term = b.point;
    v.field_term = b.bergman + b.sigma2 + b.cross;
    v.norm_sq = v.point_term + v.field_term;
    v.error = ci.error;
    return v;
}

DirichletValue dirichlet_norm_closed_k1(const CPowerSeries& f, const FFParams& p) {
    DirichletValue v = dirichlet_norm_series(f, p, coefficient_integrals_k1(p, f.degree()));
    v.method = NormMethod::closed_k1;
    return v;
}

NormBreakdown printed_corollary_k1(const CPowerSeries& f, const FFParams& p) {
    validate_complex_params(p);
    if (p.k != Order(1)) throw DomainError("the printed corollary covers k = 1");
    NormBreakdown b;
    const std::size_t N = f.degree();
    const double s = p.sigma;
    const double a = p.alpha;
    b.point = point_term(f, p);
    for (std::size_t n = 0; n < f.size(); ++n) b.bergman += std::norm(f[n]) / static_cast<double>(n + 1);
    b.bergman *= (1.0 - s) * (1.0 - s) * kPi;

    double s2 = 0.0;
    for (std::size_t n = 0; n < N; ++n)
        s2 += static_cast<double>((n + 1) * (n + 1)) / (2.0 * n + 4.0 - 2.0 * a) * std::norm(f[n + 1]);
    b.sigma2 = s * s / (a * a) * s2;

    double cross = 0.0;
    for (std::size_t m = 0; m < N; ++m) {
        for (std::size_t n = 0; n <= N; ++n) {
            const double c = static_cast<double>(m) - static_cast<double>(n) + 1.0 - a;
            const Complex prod = f[m + 1] * std::conj(f[n]);
            const double lead = 2.0 * static_cast<double>(m + 1) / (static_cast<double>(n + m) + 3.0 - a);
            // (e^{i 2 pi c} - 1) / c -> i 2 pi as c -> 0.
            if (std::abs(c) < 1e-14)
                cross += lead * 2.0 * kPi * prod.real();
            else
                cross += lead / c * ((std::polar(1.0, 2.0 * kPi * c) - 1.0) * prod).imag();
        }
    }
    b.cross = (1.0 - s) * s / a * cross;
    return b;
}

DiscrepancyReport corollary_k1_discrepancy(const CPowerSeries& f, const FFParams& p, const QuadratureSpec& spec) {
    DiscrepancyReport r;
    r.printed = printed_corollary_k1(f, p);
    r.adjudicated = series_breakdown(f, p, coefficient_integrals(p, f.degree(), spec));
    r.quadrature_norm_sq = dirichlet_norm_quad(f, p, spec).norm_sq;
    r.sigma2_ratio = r.printed.sigma2 != 0.0 ? r.adjudicated.sigma2 / r.printed.sigma2 : 0.0;
    r.cross_difference = r.adjudicated.cross - r.printed.cross;
    r.printed_matches = std::abs(r.printed.total() - r.quadrature_norm_sq) <= 1e-6 * std::abs(r.quadrature_norm_sq);
    return r;
}

Complex bergman_kernel(Complex z, Complex zeta) noexcept {
    const Complex d = 1.0 - z * std::conj(zeta);
    return 1.0 / (kPi * d * d);
}

bool bergman_hypothesis_holds(const CPowerSeries& f, const FFParams& p) noexcept {
    if (p.sigma == 0.0 || is_constant(f)) return true;
    if (p.alpha != 1.0) return false;
    try {
        return in_dirichlet_space(f, p);
    } catch (...) {
        return false;
    }
}

ReproducingResult reproduce_identity_1(const CPowerSeries& f, const FFParams& p, Complex z,
                                       const QuadratureSpec& spec) {
    validate_complex_params(p);
    require_sigma_open(p, "reproducing identity 1");
    require_beta_one(p, "reproducing identity 1");
    require_slit(z);
    require_in_dirichlet_space(f, p);
    ReproducingResult r;
    r.lhs = eval(f, z);
    const FFEvaluator D(f, p);
    const Complex field = f.empty() ? Complex{} : integrate_disk([&](Complex zeta) {
        return bergman_kernel(z, zeta) * D(zeta);
    }, spec).value;
    r.rhs = -p.sigma / (1.0 - p.sigma) * fractal_term_c(f, p, z) + field / (1.0 - p.sigma);
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

Complex exp_weight(const FFParams& p, Complex z, WeightSign sign) {
    validate_complex_params(p);
    require_sigma_positive(p, "the exponential weight");
    return std::exp(weight_exponent(p, sign) * fractal_measure_c(z, p.alpha, p.k));
}

Complex kernel_K_half(const SlitPath& path, Complex zeta, const FFParams& p, const QuadratureSpec& spec,
                      WeightSign sign) {
    validate_complex_params(p);
    require_sigma_positive(p, "K_{1/2}");
    if (path.empty()) return {};
    const double s = weight_exponent(p, sign);
    const auto integrand = [&](Complex w) {
        return std::exp(s * fractal_measure_c(w, p.alpha, p.k)) * fractal_measure_derivative_c(w, p.alpha, p.k) *
               bergman_kernel(w, zeta) / p.sigma;
    };
    const Complex prefactor = std::exp(-s * fractal_measure_c(path.end, p.alpha, p.k));
    return prefactor * path_integral(integrand, path, spec).value;
}

Complex kernel_K_half(Complex z, Complex zeta, const FFParams& p, const QuadratureSpec& spec, WeightSign sign) {
    return kernel_K_half(build_slit_path(z), zeta, p, spec, sign);
}

HalfKernel::HalfKernel(const SlitPath& path, const FFParams& p, const QuadratureSpec& inner, WeightSign sign) {
    validate_complex_params(p);
    require_sigma_positive(p, "K_{1/2}");
    inner.validate();
    if (path.empty()) return;
    const double s = weight_exponent(p, sign);
    const Complex prefactor = std::exp(-s * fractal_measure_c(path.end, p.alpha, p.k));

    std::vector<Complex> probes{{0.0, 0.0}, std::polar(0.9999, principal_arg(path.end))};
    for (int a = 0; a < 16; ++a) probes.push_back(std::polar(0.9999, -kPi + (a + 0.5) * kPi / 8.0));

    auto build = [&](int panels, std::vector<Complex>& w, std::vector<Complex>& c) {
        const std::vector<PathNode> nodes = path_rule(path, inner.nr, panels);
        w.clear();
        c.clear();
        for (const auto& n : nodes) {
            w.push_back(n.w);
            c.push_back(prefactor * n.weight * std::exp(s * fractal_measure_c(n.w, p.alpha, p.k)) *
                        fractal_measure_derivative_c(n.w, p.alpha, p.k) / p.sigma);
        }
    };
    auto eval_at = [](const std::vector<Complex>& w, const std::vector<Complex>& c, Complex zeta, double& l1) {
        std::vector<Complex> terms(w.size());
        std::vector<double> mags(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) {
            terms[j] = c[j] * bergman_kernel(w[j], zeta);
            mags[j] = std::abs(terms[j]);
        }
        l1 = pairwise_sum(mags);
        return pairwise_sum(terms);
    };

    std::vector<Complex> w0, c0;
    int panels = inner.panels_r;
    build(panels, w0, c0);
    for (int level = 1; level <= std::max(1, inner.max_refine); ++level) {
        std::vector<Complex> w1, c1;
        build(panels * 2, w1, c1);
        bool ok = true;
        for (const Complex zeta : probes) {
            double l1a = 0.0, l1b = 0.0;
            const Complex a = eval_at(w0, c0, zeta, l1a);
            const Complex b = eval_at(w1, c1, zeta, l1b);
            if (!(std::abs(a - b) <= inner.rel_tol * l1b)) {
                ok = false;
                break;
            }
        }
        panels *= 2;
        w0 = std::move(w1);
        c0 = std::move(c1);
        if (ok) {
            w_ = std::move(w0);
            c_ = std::move(c0);
            panels_ = panels;
            return;
        }
    }
    std::ostringstream msg;
    msg << "K_{1/2} path rule did not reach rel_tol " << inner.rel_tol;
    throw NoConvergence(msg.str());
}

Complex HalfKernel::operator()(Complex zeta) const noexcept {
    Complex acc{};
    for (std::size_t j = 0; j < w_.size(); ++j) acc += c_[j] * bergman_kernel(w_[j], zeta);
    return acc;
}

ReproducingResult reproduce_identity_2(const CPowerSeries& f, const FFParams& p, Complex z, const NestedSpec& spec,
                                       WeightSign sign) {
    validate_complex_params(p);
    require_sigma_open(p, "reproducing identity 2");
    require_beta_one(p, "reproducing identity 2");
    require_slit(z);
    require_in_dirichlet_space(f, p);
    ReproducingResult r;
    const Complex half{0.5, 0.0};
    r.lhs = eval(f, z);
    const double s = weight_exponent(p, sign);
    r.rhs = std::exp(s * (fractal_measure_c(half, p.alpha, p.k) - fractal_measure_c(z, p.alpha, p.k))) * eval(f, half);
    const SlitPath path = build_slit_path(z);
    if (!path.empty() && !f.empty()) {
        const HalfKernel K(path, p, spec.inner, sign);
        const FFEvaluator D(f, p);
        r.rhs += integrate_disk([&](Complex zeta) { return K(zeta) * D(zeta); }, spec.outer).value;
    }
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

double prop1_identity_check(const CPowerSeries& f, const FFParams& p, Complex z, double h, WeightSign sign) {
    validate_complex_params(p);
    require_sigma_positive(p, "the differential identity");
    require_beta_one(p, "the differential identity");
    if (!(h > 0.0)) throw DomainError("step h must be positive");
    require_slit(z);
    require_slit(z + h);
    require_slit(z - h);
    if (f.empty()) return 0.0;
    const auto G = [&](Complex w) { return exp_weight(p, w, sign) * eval(f, w); };
    const Complex lhs = (G(z + h) - G(z - h)) / (2.0 * h);
    const Complex rhs = exp_weight(p, z, sign) * fractal_measure_derivative_c(z, p.alpha, p.k) * ff_eval_c(f, p, z) /
                        p.sigma;
    return std::abs(lhs - rhs);
}

}  // namespace ffq
