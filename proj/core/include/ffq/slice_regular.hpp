#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "ffq/holo_series.hpp"
#include "ffq/quaternion.hpp"

namespace ffq {

/// Slice regular polynomial f(q) = sum_n q^n a_n with coefficients on the right.
class QPowerSeries {
public:
    QPowerSeries() = default;
    explicit QPowerSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}
    QPowerSeries(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) {}

    const std::vector<Quaternion>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Quaternion operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }

    /// True when every coefficient is real to within tol (relative to the largest one).
    bool has_real_coefficients(double tol = 1e-12) const noexcept;

    /// Embeds a complex series into C(unit).
    static QPowerSeries from_complex(const CPowerSeries& f, const Quaternion& unit);

    friend bool operator==(const QPowerSeries&, const QPowerSeries&) = default;

private:
    std::vector<Quaternion> coeffs_;
};

/// Right-coefficient Horner evaluation without the ball check.
Quaternion eval_unchecked(const QPowerSeries& f, const Quaternion& q) noexcept;

/// Throws DomainError unless |q| < 1.
Quaternion eval_q(const QPowerSeries& f, const Quaternion& q);

QPowerSeries cullen_derivative(const QPowerSeries& f);

/// Cauchy convolution sum_n q^n sum_k a_k b_{n-k}, factor order preserved.
QPowerSeries star_product(const QPowerSeries& f, const QPowerSeries& g);

/// Truncates a series to degree <= degree.
QPowerSeries truncate(const QPowerSeries& f, std::size_t degree);

QPowerSeries regular_conjugate(const QPowerSeries& f);

/// f * f^c; real coefficients.
QPowerSeries symmetrization(const QPowerSeries& f);

/// Formal reciprocal of a real-coefficient series up to the given degree.
std::vector<double> real_reciprocal(const std::vector<double>& a, std::size_t degree);

/// (1/f^s) * f^c truncated at degree; f * result = 1 + O(q^{degree+1}).
/// Throws DomainError when |a_0| < 1e-12.
QPowerSeries star_inverse(const QPowerSeries& f, std::size_t degree);

/// f restricted to C(i) written as f1 + f2 j, f1 and f2 complex series in the basis {1, i}.
struct SplitPair {
    CPowerSeries f1;
    CPowerSeries f2;
    SliceFrame frame;

    /// f1(z) + f2(z) j at the slice point x + y i.
    Quaternion eval_on_slice(Complex z) const noexcept;
};

SplitPair split(const QPowerSeries& f, const SliceFrame& frame);

/// Inverse of split: sum_n q^n (a1_n + a2_n j).
QPowerSeries combine(const SplitPair& pair);

/// Extension operator P_i built from slice data on C(i).
Quaternion extend_Pi(const SplitPair& pair, const Quaternion& q);

using SliceEvaluator = std::function<Quaternion(const Quaternion&)>;

/// f(x + y t) = 1/2 (1 - t j) f(x + y j) + 1/2 (1 + t j) f(x - y j) where j = frame.j() is the
/// slice on which f_on_slice is known and t is target_unit.
Quaternion representation_formula(const SliceEvaluator& f_on_slice, const SliceFrame& frame, double x, double y,
                                  const Quaternion& target_unit);

/// Same formula with an explicit source unit.
Quaternion representation_formula(const SliceEvaluator& f_on_slice, const Quaternion& source_unit, double x,
                                  double y, const Quaternion& target_unit);

/// exp(f(q)) for intrinsic f. Throws IntrinsicError unless the coefficients are real.
Quaternion intrinsic_exp(const QPowerSeries& f, const Quaternion& q);

}  // namespace ffq
