#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace ffq {

using Complex = std::complex<double>;

/// Tensor Gauss-Legendre configuration for the slit disk and for path integrals.
///
/// Level L uses panels_r * 2^L radial and panels_theta * 2^L angular panels with nr x ntheta
/// nodes each; the radial panel at the origin is additionally split into L + 3 geometric pieces.
/// Refinement stops when two successive levels agree to rel_tol (measured against the integral of
/// |integrand|, with an absolute floor of 64 eps times the largest such integral) or max_refine
/// levels past the first have been tried.
struct QuadratureSpec {
    int nr = 32;
    int ntheta = 32;
    int panels_r = 4;
    int panels_theta = 4;
    double rel_tol = 1e-9;
    int max_refine = 5;

    /// Throws DomainError when a node count is below 4 or a panel count below 1.
    void validate() const;

    QuadratureSpec with_tolerance(double tol) const {
        QuadratureSpec s = *this;
        s.rel_tol = tol;
        return s;
    }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with n points (n >= 1).
const GaussLegendreRule& gauss_legendre(int n);

struct DiskIntegral {
    Complex value;
    double error = 0.0;  ///< |difference| between the last two levels
    int level = 0;       ///< finest level evaluated
};

struct MultiIntegral {
    std::vector<Complex> values;
    std::vector<double> errors;
    int level = 0;

    double max_error() const noexcept;
};

/// h(r, theta, out) fills out[0..dim) with integrand components at the polar point.
using PolarIntegrand = std::function<void(double r, double theta, std::span<Complex> out)>;
using DiskIntegrand = std::function<Complex(Complex)>;
using DiskMultiIntegrand = std::function<void(Complex z, std::span<Complex> out)>;

/// One fixed level of the plain polar integral int_0^1 int_{-pi}^{pi} h dtheta dr.
/// When l1 is given it receives int |h| per component.
std::vector<Complex> integrate_polar_level(const PolarIntegrand& h, std::size_t dim, const QuadratureSpec& spec,
                                           int level, std::vector<double>* l1 = nullptr);

/// Adaptive plain polar integral (no Jacobian). Throws NoConvergence at the refinement cap.
MultiIntegral integrate_polar(const PolarIntegrand& h, std::size_t dim, const QuadratureSpec& spec);

/// Integral over D \ (-1, 0] against the area measure r dr dtheta. Throws NoConvergence.
DiskIntegral integrate_disk(const DiskIntegrand& f, const QuadratureSpec& spec);

/// Vector-valued integrand sharing one set of nodes.
MultiIntegral integrate_disk_multi(const DiskMultiIntegrand& f, std::size_t dim, const QuadratureSpec& spec);

/// Fixed level of the area integral.
std::vector<Complex> integrate_disk_level(const DiskMultiIntegrand& f, std::size_t dim, const QuadratureSpec& spec,
                                          int level);

/// Straight segment or circular arc centred at the origin, parametrised on t in [0, 1].
class PathSegment {
public:
    static PathSegment line(Complex a, Complex b) noexcept;
    static PathSegment arc(double radius, double theta0, double theta1) noexcept;

    Complex point(double t) const noexcept;
    Complex tangent(double t) const noexcept;
    Complex start() const noexcept { return point(0.0); }
    Complex end() const noexcept { return point(1.0); }
    double length() const noexcept;
    bool is_arc() const noexcept { return arc_; }

private:
    bool arc_ = false;
    Complex a_{}, b_{};
    double radius_ = 0.0, theta0_ = 0.0, theta1_ = 0.0;
};

/// Piecewise smooth path inside the slit disk.
struct SlitPath {
    std::vector<PathSegment> segments;
    Complex start{0.5, 0.0};
    Complex end{0.5, 0.0};

    bool empty() const noexcept { return segments.empty(); }
};

/// Real segment 1/2 -> |z| followed by the arc of radius |z| from angle 0 to Arg z. Degenerate
/// pieces are omitted, so z = 1/2 gives the empty path. Throws DomainError off the slit disk.
SlitPath build_slit_path(Complex z);

/// 1/2 -> via_radius along the real axis, arc to Arg z, then radially to z.
SlitPath build_detour_path(Complex z, double via_radius);

/// True when every one of `samples` equally spaced parameter values per segment lies in the slit disk.
bool path_in_slit_disk(const SlitPath& path, int samples = 1000);

struct PathNode {
    Complex w;
    Complex weight;  ///< quadrature weight times dw/dt
};

/// Composite Gauss-Legendre nodes along the path with `panels` panels per segment.
std::vector<PathNode> path_rule(const SlitPath& path, int nodes_per_panel, int panels);

/// Contour integral along the path, refined by panel doubling. Throws NoConvergence.
DiskIntegral path_integral(const DiskIntegrand& f, const SlitPath& path, const QuadratureSpec& spec);

/// Deterministic pairwise summation.
Complex pairwise_sum(std::span<const Complex> terms) noexcept;
double pairwise_sum(std::span<const double> terms) noexcept;

}  // namespace ffq
