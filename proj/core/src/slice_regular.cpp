#include "ffq/slice_regular.hpp"

#include <algorithm>

#include "ffq/errors.hpp"

namespace ffq {

bool QPowerSeries::has_real_coefficients(double tol) const noexcept {
    double scale = 0.0;
    for (const auto& a : coeffs_) scale = std::max(scale, a.norm());
    for (const auto& a : coeffs_)
        if (a.vector_norm() > tol * std::max(scale, 1.0)) return false;
    return true;
}

QPowerSeries QPowerSeries::from_complex(const CPowerSeries& f, const Quaternion& unit) {
    std::vector<Quaternion> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) out.push_back(Quaternion{c.real()} + unit * c.imag());
    return QPowerSeries(std::move(out));
}

Quaternion eval_unchecked(const QPowerSeries& f, const Quaternion& q) noexcept {
    Quaternion acc{};
    const auto& a = f.coeffs();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = q * acc + *it;
    return acc;
}

Quaternion eval_q(const QPowerSeries& f, const Quaternion& q) {
    if (!(q.norm_sq() < 1.0)) throw DomainError("slice regular series evaluated outside the open unit ball");
    return eval_unchecked(f, q);
}

QPowerSeries cullen_derivative(const QPowerSeries& f) {
    const auto& a = f.coeffs();
    if (a.size() <= 1) return QPowerSeries{};
    std::vector<Quaternion> d(a.size() - 1);
    for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = a[n] * static_cast<double>(n);
    return QPowerSeries(std::move(d));
}

QPowerSeries star_product(const QPowerSeries& f, const QPowerSeries& g) {
    if (f.empty() || g.empty()) return QPowerSeries{};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t m = 0; m < b.size(); ++m) c[k + m] += a[k] * b[m];
    return QPowerSeries(std::move(c));
}

QPowerSeries truncate(const QPowerSeries& f, std::size_t degree) {
    const auto& a = f.coeffs();
    if (a.size() <= degree + 1) return f;
    return QPowerSeries(std::vector<Quaternion>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(degree + 1)));
}

QPowerSeries regular_conjugate(const QPowerSeries& f) {
    std::vector<Quaternion> c;
    c.reserve(f.size());
    for (const auto& a : f.coeffs()) c.push_back(a.conj());
    return QPowerSeries(std::move(c));
}

QPowerSeries symmetrization(const QPowerSeries& f) {
    QPowerSeries s = star_product(f, regular_conjugate(f));
    // Imaginary parts cancel pairwise (a_k conj(a_m) + a_m conj(a_k) is real); drop the rounding residue.
    if (!s.has_real_coefficients(1e-12)) throw DomainError("symmetrization produced non-real coefficients");
    std::vector<Quaternion> c;
    c.reserve(s.size());
    for (const auto& a : s.coeffs()) c.emplace_back(a.w);
    return QPowerSeries(std::move(c));
}

std::vector<double> real_reciprocal(const std::vector<double>& a, std::size_t degree) {
    if (a.empty() || a[0] == 0.0) throw DomainError("formal reciprocal needs a nonzero constant term");
    std::vector<double> r(degree + 1, 0.0);
    r[0] = 1.0 / a[0];
    for (std::size_t n = 1; n <= degree; ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= std::min(n, a.size() - 1); ++k) s += a[k] * r[n - k];
        r[n] = -s / a[0];
    }
    return r;
}

QPowerSeries star_inverse(const QPowerSeries& f, std::size_t degree) {
    if (f.empty() || f[0].norm() < 1e-12) throw DomainError("star inverse needs |a_0| >= 1e-12");
    const QPowerSeries fs = symmetrization(f);
    std::vector<double> s;
    s.reserve(fs.size());
    for (const auto& c : fs.coeffs()) s.push_back(c.w);
    const std::vector<double> r = real_reciprocal(s, degree);
    std::vector<Quaternion> rq(r.begin(), r.end());
    return truncate(star_product(QPowerSeries(std::move(rq)), regular_conjugate(f)), degree);
}

Quaternion SplitPair::eval_on_slice(Complex z) const noexcept {
    return frame.compose(eval(f1, z), eval(f2, z));
}

SplitPair split(const QPowerSeries& f, const SliceFrame& frame) {
    std::vector<Complex> c1;
    std::vector<Complex> c2;
    c1.reserve(f.size());
    c2.reserve(f.size());
    for (const auto& a : f.coeffs()) {
        const auto [p, q] = frame.split(a);
        c1.push_back(p);
        c2.push_back(q);
    }
    return {CPowerSeries(std::move(c1)), CPowerSeries(std::move(c2)), frame};
}

QPowerSeries combine(const SplitPair& pair) {
    const std::size_t n = std::max(pair.f1.size(), pair.f2.size());
    std::vector<Quaternion> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = pair.frame.compose(pair.f1[k], pair.f2[k]);
    return QPowerSeries(std::move(c));
}

Quaternion extend_Pi(const SplitPair& pair, const Quaternion& q) {
    const SlicePolar p = slice_decompose(q);
    const Quaternion& i = pair.frame.i();
    const Quaternion minus = pair.eval_on_slice({p.x, -p.y});
    const Quaternion plus = pair.eval_on_slice({p.x, p.y});
    const Quaternion ii = p.axis * i;
    return ((Quaternion{1.0} + ii) * minus + (Quaternion{1.0} - ii) * plus) * 0.5;
}

Quaternion representation_formula(const SliceEvaluator& f_on_slice, const Quaternion& source_unit, double x,
                                  double y, const Quaternion& target_unit) {
    const Quaternion tj = target_unit * source_unit;
    const Quaternion fp = f_on_slice(Quaternion{x} + source_unit * y);
    const Quaternion fm = f_on_slice(Quaternion{x} - source_unit * y);
    return ((Quaternion{1.0} - tj) * fp + (Quaternion{1.0} + tj) * fm) * 0.5;
}

Quaternion representation_formula(const SliceEvaluator& f_on_slice, const SliceFrame& frame, double x, double y,
                                  const Quaternion& target_unit) {
    return representation_formula(f_on_slice, frame.j(), x, y, target_unit);
}

Quaternion intrinsic_exp(const QPowerSeries& f, const Quaternion& q) {
    if (!f.has_real_coefficients(1e-12)) throw IntrinsicError("exp[f] requires an intrinsic f (real coefficients)");
    return exp(eval_unchecked(f, q));
}

}  // namespace ffq
