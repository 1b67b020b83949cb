#pragma once

#include "ffq/ff_complex.hpp"
#include "ffq/slice_regular.hpp"

namespace ffq {

// Quaternionic i-derivative on the slice E_i = B cap C(i) minus the slit, and the right-module norm
//
//   ||f||^2 = alpha |f(1/2)|^2 + int_{E_i} |D_i f(z)|^2 dmu,
//
// computed by splitting f|_{C(i)} = f1 + f2 j into two complex problems.

/// D_i f at x + y i via the split parts: D f1(z) + D f2(z) j. Requires beta = 1.
Quaternion ff_eval_q(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z);

/// D_i f at x + y i from the slice formula (1 - sigma) f(q) + sigma (e_k(q^alpha)')^{-1} f'(q) with the
/// intrinsic factor acting by left multiplication.
Quaternion ff_eval_q_direct(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z);

struct DualEvaluation {
    Quaternion split;
    Quaternion direct;
    double difference = 0.0;  ///< max componentwise |split - direct|
};

DualEvaluation ff_eval_q_dual(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z);

struct QDirichletValue {
    double norm_sq = 0.0;
    double part1 = 0.0;  ///< ||f1||^2
    double part2 = 0.0;  ///< ||f2||^2
    SliceFrame frame = SliceFrame::standard();
    NormMethod method = NormMethod::quadrature;
    double error = 0.0;
};

/// Norm through the split parts, each by quadrature (or series when ci is given).
QDirichletValue qdirichlet_norm(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                const QuadratureSpec& spec = {});

/// Both parts by the complex series with shared coefficient integrals.
QDirichletValue qdirichlet_norm_split_series(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                             const CoefficientIntegrals& ci);

/// Quaternionic series norm assembled from the projections (1/2)(X - i X i) of X = a_n conj(a_m),
/// without splitting the coefficients. Throws DegreeMismatch as the complex series does.
QDirichletValue qdirichlet_norm_series(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                       const CoefficientIntegrals& ci);

/// int |D_i f|^2, int |D f1|^2 and int |D f2|^2 on one shared set of nodes.
struct SplittingCheck {
    double direct = 0.0;  ///< alpha |f(1/2)|^2 + int |D_i f|^2
    double part1 = 0.0;
    double part2 = 0.0;
    double residual = 0.0;  ///< |direct - (part1 + part2)|
};

SplittingCheck splitting_identity_check(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame,
                                        const QuadratureSpec& spec = {});

/// alpha conj(f(1/2)) g(1/2) + int conj(D_i f) D_i g dmu over E_i.
Quaternion qdirichlet_inner_product(const QPowerSeries& f, const QPowerSeries& g, const FFParams& p,
                                    const SliceFrame& frame, const QuadratureSpec& spec = {});

struct SliceComparison {
    double norm_i = 0.0;
    double norm_j = 0.0;
    double ratio = 0.0;  ///< norm_j / norm_i
};

/// ||f||^2 on the slice of frame_j over ||f||^2 on the slice of frame_i. Throws DivisionByZero when the
/// denominator vanishes and ToleranceError when the ratio exceeds 8 + 1e-9. With ci the norms use the
/// series, otherwise quadrature.
SliceComparison slice_norm_compare(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame_i,
                                   const SliceFrame& frame_j, const QuadratureSpec& spec = {},
                                   const CoefficientIntegrals* ci = nullptr);

struct QReproducingResult {
    Quaternion lhs;
    Quaternion rhs1;
    Quaternion rhs2;
    double residual1 = 0.0;
    double residual2 = 0.0;
};

/// Both reproducing identities at q: the complex identities run on C(i) for f1 and f2 at z = x + y i and
/// its conjugate, and the results are carried to q = x + y I_q by the representation formula.
QReproducingResult q_reproduce(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, const Quaternion& q,
                               const NestedSpec& spec = {}, WeightSign sign = WeightSign::consistent);

/// Slice version of the differential identity: central difference of E f along the real direction
/// against (1/sigma) E (e_k)' D_i f on C(i), E = exp_weight.
double q_prop1_identity_check(const QPowerSeries& f, const FFParams& p, const SliceFrame& frame, Complex z,
                              double h = 1e-5, WeightSign sign = WeightSign::consistent);

}  // namespace ffq
