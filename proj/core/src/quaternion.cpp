#include "ffq/quaternion.hpp"

#include <algorithm>
#include <numbers>

#include "ffq/errors.hpp"

namespace ffq {

double max_abs_diff(const Quaternion& a, const Quaternion& b) noexcept {
    return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
    return q.conj() / n2;
}

SlicePolar slice_decompose(const Quaternion& q) noexcept {
    SlicePolar p;
    p.x = q.w;
    p.y = q.vector_norm();
    p.axis = p.y > 0.0 ? q.vector() / p.y : units::e1;
    p.mod = std::hypot(p.x, p.y);
    // y >= 0, so atan2 already lands in [0, pi]; the real negative axis gives pi.
    p.arg = std::atan2(p.y, p.x);
    return p;
}

Quaternion principal_power(const Quaternion& q, double beta) {
    const SlicePolar p = slice_decompose(q);
    if (p.y == 0.0 && p.x <= 0.0)
        throw BranchError("principal power undefined on the real half-line (-inf, 0]");
    const std::complex<double> log_q{std::log(p.mod), p.arg};
    const std::complex<double> r = std::exp(beta * log_q);
    return Quaternion{r.real()} + p.axis * r.imag();
}

Quaternion exp(const Quaternion& q) noexcept {
    const double v = q.vector_norm();
    const double ew = std::exp(q.w);
    if (v == 0.0) return Quaternion{ew};
    return Quaternion{ew * std::cos(v)} + q.vector() * (ew * std::sin(v) / v);
}

Quaternion truncated_exp(const Quaternion& q, Order k) noexcept {
    if (k.is_infinite()) return exp(q);
    const unsigned n = k.value();
    // Horner on real coefficients 1/m!: e_n(q) = 1 + q(1 + q/2(1 + q/3(...))).
    Quaternion acc{1.0};
    for (unsigned m = n; m >= 1; --m) acc = Quaternion{1.0} + q * acc / static_cast<double>(m);
    return acc;
}

std::pair<std::complex<double>, std::complex<double>> SliceFrame::split(const Quaternion& a) const noexcept {
    const Quaternion k = ij();
    return {{a.w, dot(a, i_)}, {dot(a, j_), dot(a, k)}};
}

SliceFrame SliceFrame::make(const Quaternion& i, const Quaternion& j) {
    constexpr double tol = 1e-12;
    auto is_unit_imaginary = [](const Quaternion& u) {
        return std::abs(u.w) <= tol && std::abs(u.norm() - 1.0) <= tol;
    };
    if (!is_unit_imaginary(i) || !is_unit_imaginary(j))
        throw FrameError("frame vectors must be unit imaginary quaternions");
    if (std::abs(dot(i, j)) > tol) throw FrameError("frame vectors must be orthogonal");
    return SliceFrame(i, j);
}

SliceFrame SliceFrame::orthonormalize(const Quaternion& i, const Quaternion& j) {
    const Quaternion iv = i.vector();
    const double ni = iv.norm();
    if (ni == 0.0) throw FrameError("first frame vector has no imaginary part");
    const Quaternion iu = iv / ni;
    Quaternion jv = j.vector();
    jv -= iu * dot(jv, iu);
    const double nj = jv.norm();
    if (nj <= 1e-12 * std::max(1.0, j.norm())) throw FrameError("second frame vector is parallel to the first");
    return SliceFrame(iu, jv / nj);
}

}  // namespace ffq
