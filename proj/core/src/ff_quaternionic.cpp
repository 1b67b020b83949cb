#include "ffq/ff_quaternionic.hpp"

#include <cmath>
#include <numbers>

#include "ffq/errors.hpp"

namespace ffq {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const FFParams& p) {
    validate_complex_params(p);
    if (p.beta != 1.0) throw DomainError("the quaternionic derivative is implemented for beta = 1");
}

// Slice formula with f' cached.
class DirectEvaluator {
public:
    DirectEvaluator(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame)
        : f_(f), df_(cullen_derivative(f)), p_(p), frame_(frame) {}

    Quaternion operator()(Complex z) const {
        if (!in_slit_disk(z)) throw BranchError("point lies outside the slit slice E_i");
        const Quaternion q = frame_.embed(z);
        Quaternion out = eval_unchecked(f_, q) * (1.0 - p_.sigma);
        if (p_.sigma != 0.0) {
            const Quaternion d = frame_.embed(fractal_measure_derivative_c(z, p_.alpha, p_.k));
            out += inverse(d) * eval_unchecked(df_, q) * p_.sigma;
        }
        return out;
    }

private:
    const QPowerSeries& f_;
    QPowerSeries df_;
    FFParams p_;
    SliceFrame frame_;
};

double point_term(const QPowerSeries& f, const FFParams& p) {
    return p.alpha * eval_unchecked(f, Quaternion{0.5}).norm_sq();
}

}  // namespace

Quaternion ff_eval_q(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z) {
    check_params(p);
    const SplitPair s = split(f, frame);
    return frame.compose(ff_eval_c(s.f1, p, z), ff_eval_c(s.f2, p, z));
}

Quaternion ff_eval_q_direct(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z) {
    check_params(p);
    return DirectEvaluator(f, p, frame)(z);
}

DualEvaluation ff_eval_q_dual(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z) {
    DualEvaluation d;
    d.split = ff_eval_q(f, p, frame, z);
    d.direct = ff_eval_q_direct(f, p, frame, z);
    d.difference = max_abs_diff(d.split, d.direct);
    return d;
}

QDirichletValue qdirichlet_norm(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                const QuadratureSpec& spec) {
    check_params(p);
    const SplitPair s = split(f, frame);
    const DirichletValue n1 = dirichlet_norm_quad(s.f1, p, spec);
    const DirichletValue n2 = dirichlet_norm_quad(s.f2, p, spec);
    QDirichletValue v;
    v.frame = frame;
    v.method = NormMethod::quadrature;
    v.part1 = n1.norm_sq;
    v.part2 = n2.norm_sq;
    v.norm_sq = v.part1 + v.part2;
    v.error = n1.error + n2.error;
    return v;
}

QDirichletValue qdirichlet_norm_split_series(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                             const CoefficientIntegrals& ci) {
    check_params(p);
    const SplitPair s = split(f, frame);
    QDirichletValue v;
    v.frame = frame;
    v.method = NormMethod::series;
    v.part1 = dirichlet_norm_series(s.f1, p, ci).norm_sq;
    v.part2 = dirichlet_norm_series(s.f2, p, ci).norm_sq;
    v.norm_sq = v.part1 + v.part2;
    v.error = ci.error;
    return v;
}

QDirichletValue qdirichlet_norm_series(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                       const CoefficientIntegrals& ci) {
    check_params(p);
    if (f.degree() > ci.degree)
        throw DegreeMismatch("polynomial degree " + std::to_string(f.degree()) +
                             " exceeds the coefficient-integral degree " + std::to_string(ci.degree));
    if (ci.params.alpha != p.alpha || ci.params.k != p.k)
        throw DegreeMismatch("coefficient integrals were computed for different alpha or k");
    const Quaternion& i = frame.i();
    // X - i X i is twice the C(i) component of X.
    const auto twice_slice_part = [&](const Quaternion& X) { return frame.project(X - i * X * i); };

    const std::size_t N = ci.degree;
    const double s = p.sigma;
    const double a = p.alpha;
    double bergman = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) bergman += f[n].norm_sq() / static_cast<double>(n + 1);
    bergman *= (1.0 - s) * (1.0 - s) * kPi;

    double s2 = 0.0;
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < N; ++m)
            s2 += static_cast<double>((n + 1) * (m + 1)) *
                  (twice_slice_part(f[n + 1] * f[m + 1].conj()) * ci.alpha(m, n)).real();
    double cross = 0.0;
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n <= N; ++n)
            cross += 2.0 * static_cast<double>(m + 1) * (twice_slice_part(f[m + 1] * f[n].conj()) * ci.beta(m, n)).real();

    QDirichletValue v;
    v.frame = frame;
    v.method = NormMethod::series;
    v.norm_sq = point_term(f, p) + bergman + s * s / (2.0 * a * a) * s2 + (1.0 - s) * s / (2.0 * a) * cross;
    // Parts from the same projections: the C(i) and C(i) j components of each coefficient.
    const SplitPair sp = split(f, frame);
    const NormBreakdown b1 = series_breakdown(sp.f1, p, ci);
    const NormBreakdown b2 = series_breakdown(sp.f2, p, ci);
    v.part1 = b1.total();
    v.part2 = b2.total();
    v.error = ci.error;
    return v;
}

SplittingCheck splitting_identity_check(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                        const QuadratureSpec& spec) {
    check_params(p);
    const SplitPair s = split(f, frame);
    if (!in_dirichlet_space(s.f1, p) || !in_dirichlet_space(s.f2, p))
        throw NotInSpace("a split part lies outside the Dirichlet-type space");
    const DirectEvaluator Dq(f, p, frame);
    const FFEvaluator D1(s.f1, p);
    const FFEvaluator D2(s.f2, p);
    const MultiIntegral m = integrate_disk_multi(
        [&](Complex z, std::span<Complex> out) {
            out[0] = Dq(z).norm_sq();
            out[1] = std::norm(D1(z));
            out[2] = std::norm(D2(z));
        },
        3, spec);
    const Complex half{0.5, 0.0};
    SplittingCheck c;
    c.direct = point_term(f, p) + m.values[0].real();
    c.part1 = p.alpha * std::norm(eval(s.f1, half)) + m.values[1].real();
    c.part2 = p.alpha * std::norm(eval(s.f2, half)) + m.values[2].real();
    c.residual = std::abs(c.direct - (c.part1 + c.part2));
    return c;
}

Quaternion qdirichlet_inner_product(const QPowerSeries& f, const QPowerSeries& g, const FFParams& p,
                                    const SliceFrame& frame, const QuadratureSpec& spec) {
    check_params(p);
    const DirectEvaluator Df(f, p, frame);
    const DirectEvaluator Dg(g, p, frame);
    const MultiIntegral m = integrate_disk_multi(
        [&](Complex z, std::span<Complex> out) {
            const Quaternion v = Df(z).conj() * Dg(z);
            out[0] = {v.w, v.x};
            out[1] = {v.y, v.z};
        },
        2, spec);
    const Quaternion half{0.5};
    Quaternion out = eval_unchecked(f, half).conj() * eval_unchecked(g, half) * p.alpha;
    out += Quaternion{m.values[0].real(), m.values[0].imag(), m.values[1].real(), m.values[1].imag()};
    return out;
}

SliceComparison slice_norm_compare(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame_i,
                                   const SliceFrame& frame_j, const QuadratureSpec& spec,
                                   const CoefficientIntegrals* ci) {
    const auto norm = [&](const SliceFrame& fr) {
        return ci ? qdirichlet_norm_split_series(f, p, fr, *ci).norm_sq : qdirichlet_norm(f, p, fr, spec).norm_sq;
    };
    SliceComparison c;
    c.norm_i = norm(frame_i);
    if (!(c.norm_i > 0.0)) throw DivisionByZero("the norm on the reference slice vanishes");
    c.norm_j = norm(frame_j);
    c.ratio = c.norm_j / c.norm_i;
    if (c.ratio > 8.0 + 1e-9)
        throw ToleranceError("slice comparison ratio " + std::to_string(c.ratio) + " exceeds 8");
    return c;
}

QReproducingResult q_reproduce(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, const Quaternion& q,
                               const NestedSpec& spec, WeightSign sign) {
    check_params(p);
    if (!(q.norm() < 1.0)) throw DomainError("q must lie in the open unit ball");
    const SlicePolar sp = slice_decompose(q);
    const Complex z{sp.x, sp.y};
    if (!in_slit_disk(z)) throw BranchError("q lies on the slit (-1, 0]");
    const SplitPair parts = split(f, frame);

    const auto on_slice = [&](Complex w) {
        const ReproducingResult a1 = reproduce_identity_1(parts.f1, p, w, spec.outer);
        const ReproducingResult b1 = reproduce_identity_1(parts.f2, p, w, spec.outer);
        const ReproducingResult a2 = reproduce_identity_2(parts.f1, p, w, spec, sign);
        const ReproducingResult b2 = reproduce_identity_2(parts.f2, p, w, spec, sign);
        return std::pair{frame.compose(a1.rhs, b1.rhs), frame.compose(a2.rhs, b2.rhs)};
    };
    const auto upper = on_slice(z);
    const auto lower = sp.y == 0.0 ? upper : on_slice(std::conj(z));

    // The slice values are known at x + y i (upper) and x - y i (lower).
    const auto pick = [&](bool first) {
        return [&, first](const Quaternion& w) {
            const bool up = frame.project(w).imag() >= 0.0;
            const auto& v = up ? upper : lower;
            return first ? v.first : v.second;
        };
    };
    QReproducingResult r;
    r.lhs = eval_q(f, q);
    r.rhs1 = representation_formula(pick(true), frame.i(), sp.x, sp.y, sp.axis);
    r.rhs2 = representation_formula(pick(false), frame.i(), sp.x, sp.y, sp.axis);
    r.residual1 = (r.lhs - r.rhs1).norm();
    r.residual2 = (r.lhs - r.rhs2).norm();
    return r;
}

double q_prop1_identity_check(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z, double h,
                              WeightSign sign) {
    check_params(p);
    if (!(h > 0.0)) throw DomainError("step h must be positive");
    if (!in_slit_disk(z) || !in_slit_disk(z + h) || !in_slit_disk(z - h))
        throw BranchError("the difference stencil leaves the slit slice");
    const auto G = [&](Complex w) { return frame.embed(exp_weight(p, w, sign)) * eval_unchecked(f, frame.embed(w)); };
    const Quaternion lhs = (G(z + h) - G(z - h)) / (2.0 * h);
    const Complex factor = exp_weight(p, z, sign) * fractal_measure_derivative_c(z, p.alpha, p.k) / p.sigma;
    const Quaternion rhs = frame.embed(factor) * ff_eval_q_direct(f, p, frame, z);
    return (lhs - rhs).norm();
}

}  // namespace ffq
